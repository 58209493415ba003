#include "dlorder/features.hpp"

#include <algorithm>

#include "dlorder/error.hpp"
#include "dlorder/krss.hpp"
#include "dlorder/text_util.hpp"

namespace dlorder {

const std::array<std::string_view, kFeatureCount>& featureNames() {
  static const std::array<std::string_view, kFeatureCount> names = {
      "numNominals",
      "numInstances",
      "numClasses",
      "avgPopulation",
      "numGCIs",
      "numGeneratingRules",
      "tboxRatio",
      "rboxRatio",
      "aboxRatio",
      "numObjectProperties",
      "numInverseObjectProperties",
      "numSubclassAxioms",
      "numEquivalentClassAxioms",
      "numDisjointClassAxioms",
      "numNondetVertices",
      "avgOfAvgChildSize",
      "avgOfAvgChildDepth",
      "avgOfAvgChildFrequency",
      "maxChildrenPerVertex",
      "avgChildrenPerVertex",
      "numPositiveChildOccurrences",
      "numNegativeChildOccurrences",
      "positiveChildRatio",
      "negativeChildRatio",
      "totalAxioms",
      "numConjunctions",
      "numDisjunctions",
      "numExistentials",
      "numUniversals",
      "numNegations",
      "maxConceptSize",
      "avgConceptSize",
      "maxConceptDepth",
      "avgConceptDepth",
      "totalDagVertices",
      "nondetVertexRatio",
      "maxChildFrequency",
      "avgDisjunctsPerNondetVertex",
      "sourceSizeBytes",
  };
  return names;
}

namespace {

std::size_t countKind(const Concept& c, Concept::Kind kind) {
  std::size_t n = c.is(kind) ? 1 : 0;
  for (const auto& child : c.children()) n += countKind(child, kind);
  return n;
}

void collectOrArities(const Concept& c, std::vector<std::size_t>& out) {
  if (c.is(Concept::Kind::Or)) out.push_back(c.children().size());
  for (const auto& child : c.children()) collectOrArities(child, out);
}

double ratio(double num, double den) { return den > 0 ? num / den : 0.0; }

}  // namespace

FeatureVector extractFeatures(const Ontology& o, const Dag& d) {
  using F = Feature;
  FeatureVector f;

  const double total = static_cast<double>(o.axiomCount());
  f[F::NumNominals] = 0;
  f[F::NumInstances] = static_cast<double>(o.individuals().size());
  f[F::NumClasses] = static_cast<double>(o.classes().size());
  f[F::AvgPopulation] = f[F::NumInstances] / std::max(f[F::NumClasses], 1.0);
  f[F::NumGCIs] = static_cast<double>(d.internalizedGciCount());
  f[F::TboxRatio] = ratio(static_cast<double>(o.tbox().size()), total);
  f[F::RboxRatio] = ratio(static_cast<double>(o.rbox().size()), total);
  f[F::AboxRatio] = ratio(static_cast<double>(o.abox().size()), total);
  f[F::NumObjectProperties] = static_cast<double>(o.roles().size());
  f[F::NumInverseObjectProperties] = 0;
  f[F::TotalAxioms] = total;

  // Every concept expression as written, and the GCI form each axiom takes.
  std::vector<const Concept*> expressions;
  std::vector<Concept> internal;
  for (const auto& ax : o.tbox()) {
    expressions.push_back(&ax.lhs);
    expressions.push_back(&ax.rhs);
    switch (ax.kind) {
      case TBoxAxiom::Kind::Subsumption:
        f[F::NumSubclassAxioms] += 1;
        internal.push_back(Concept::disjunction({Concept::negation(ax.lhs), ax.rhs}));
        break;
      case TBoxAxiom::Kind::Equivalence:
        f[F::NumEquivalentClassAxioms] += 1;
        internal.push_back(Concept::disjunction({Concept::negation(ax.lhs), ax.rhs}));
        internal.push_back(Concept::disjunction({Concept::negation(ax.rhs), ax.lhs}));
        break;
      case TBoxAxiom::Kind::Disjointness:
        f[F::NumDisjointClassAxioms] += 1;
        internal.push_back(Concept::disjunction({Concept::negation(ax.lhs), Concept::negation(ax.rhs)}));
        break;
    }
  }
  for (const auto& ax : o.abox()) {
    if (ax.kind != ABoxAxiom::Kind::ConceptAssertion) continue;
    expressions.push_back(&ax.classExpr);
    internal.push_back(ax.classExpr);
  }
  for (const auto& c : internal) {
    f[F::NumGeneratingRules] += static_cast<double>(countKind(negationNormalForm(c), Concept::Kind::Some));
  }

  std::vector<std::size_t> orArities;
  double sizeSum = 0, depthSum = 0;
  for (const auto* c : expressions) {
    f[F::NumConjunctions] += static_cast<double>(countKind(*c, Concept::Kind::And));
    f[F::NumDisjunctions] += static_cast<double>(countKind(*c, Concept::Kind::Or));
    f[F::NumExistentials] += static_cast<double>(countKind(*c, Concept::Kind::Some));
    f[F::NumUniversals] += static_cast<double>(countKind(*c, Concept::Kind::All));
    f[F::NumNegations] += static_cast<double>(countKind(*c, Concept::Kind::Not));
    auto size = static_cast<double>(conceptSize(*c));
    auto depth = static_cast<double>(conceptDepth(*c));
    f[F::MaxConceptSize] = std::max(f[F::MaxConceptSize], size);
    f[F::MaxConceptDepth] = std::max(f[F::MaxConceptDepth], depth);
    sizeSum += size;
    depthSum += depth;
    collectOrArities(*c, orArities);
  }
  if (!expressions.empty()) {
    f[F::AvgConceptSize] = sizeSum / static_cast<double>(expressions.size());
    f[F::AvgConceptDepth] = depthSum / static_cast<double>(expressions.size());
  }
  if (!orArities.empty()) {
    double sum = 0;
    for (auto a : orArities) sum += static_cast<double>(a);
    f[F::AvgDisjunctsPerNondetVertex] = sum / static_cast<double>(orArities.size());
  }

  // Non-deterministic vertices. Child metrics are taken on the disjunct the
  // tableau would add (the negated edge); polarity counts on the raw edge.
  auto nondet = nondeterministicVertices(d);
  double sumAvgSize = 0, sumAvgDepth = 0, sumAvgFreq = 0, childTotal = 0;
  for (auto v : nondet) {
    const auto& children = d.vertex(v).children;
    double s = 0, dep = 0, fr = 0;
    for (const auto& e : children) {
      auto stats = d.signedStats(e.negate());
      s += static_cast<double>(stats.size);
      dep += static_cast<double>(stats.depth);
      fr += static_cast<double>(stats.frequency);
      f[F::MaxChildFrequency] = std::max(f[F::MaxChildFrequency], static_cast<double>(stats.frequency));
      if (e.negated) {
        f[F::NumNegativeChildOccurrences] += 1;
      } else {
        f[F::NumPositiveChildOccurrences] += 1;
      }
    }
    auto k = static_cast<double>(children.size());
    sumAvgSize += s / k;
    sumAvgDepth += dep / k;
    sumAvgFreq += fr / k;
    childTotal += k;
    f[F::MaxChildrenPerVertex] = std::max(f[F::MaxChildrenPerVertex], k);
  }
  auto count = static_cast<double>(nondet.size());
  f[F::NumNondetVertices] = count;
  if (count > 0) {
    f[F::AvgOfAvgChildSize] = sumAvgSize / count;
    f[F::AvgOfAvgChildDepth] = sumAvgDepth / count;
    f[F::AvgOfAvgChildFrequency] = sumAvgFreq / count;
    f[F::AvgChildrenPerVertex] = childTotal / count;
    f[F::PositiveChildRatio] = f[F::NumPositiveChildOccurrences] / childTotal;
    f[F::NegativeChildRatio] = f[F::NumNegativeChildOccurrences] / childTotal;
  }
  // The top vertex is always present and not counted.
  f[F::TotalDagVertices] = static_cast<double>(d.size() - 1);
  f[F::NondetVertexRatio] = ratio(count, f[F::TotalDagVertices]);
  f[F::SourceSizeBytes] = static_cast<double>(unparse(o).size());
  return f;
}

std::string featureCsv(const std::vector<FeatureRow>& rows) {
  std::string out = "id";
  for (auto name : featureNames()) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (const auto& [id, fv] : rows) {
    checkCsvField(id);
    out += id;
    for (double v : fv.values) {
      out += ',';
      out += formatDouble(v);
    }
    out += '\n';
  }
  return out;
}

void writeFeatureCsv(const std::filesystem::path& path, const std::vector<FeatureRow>& rows) {
  writeTextFile(path, featureCsv(rows));
}

std::vector<FeatureRow> parseFeatureCsv(std::string_view text) {
  auto lines = splitLines(text);
  if (lines.empty()) throw IoError("feature CSV: missing header");
  auto header = splitFields(lines.front());
  if (header.size() != kFeatureCount + 1 || header[0] != "id") {
    throw IoError("feature CSV: unexpected header");
  }
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (header[i + 1] != featureNames()[i]) {
      throw IoError("feature CSV: column " + std::to_string(i + 1) + " is '" + std::string(header[i + 1]) +
                    "', expected '" + std::string(featureNames()[i]) + "'");
    }
  }
  std::vector<FeatureRow> rows;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    auto fields = splitFields(lines[l]);
    if (fields.size() != kFeatureCount + 1) {
      throw IoError("feature CSV: line " + std::to_string(l + 1) + " has " + std::to_string(fields.size()) +
                    " fields");
    }
    FeatureVector fv;
    for (std::size_t i = 0; i < kFeatureCount; ++i) fv.values[i] = parseDouble(fields[i + 1]);
    rows.emplace_back(std::string(fields[0]), fv);
  }
  return rows;
}

std::vector<FeatureRow> readFeatureCsv(const std::filesystem::path& path) {
  return parseFeatureCsv(readTextFile(path));
}

}  // namespace dlorder
