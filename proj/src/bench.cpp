#include "dlorder/bench.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "dlorder/dag.hpp"
#include "dlorder/error.hpp"
#include "dlorder/heuristics.hpp"
#include "dlorder/krss.hpp"
#include "dlorder/ml.hpp"
#include "dlorder/tableau.hpp"
#include "dlorder/text_util.hpp"

namespace dlorder {

// ---- spec

namespace {

void checkRange(const IntRange& r, int min, const char* name) {
  if (r.lo < min || r.hi < r.lo) {
    throw ConfigError(std::string("corpus spec: ") + name + " range [" + std::to_string(r.lo) + ", " +
                      std::to_string(r.hi) + "] is empty or below " + std::to_string(min));
  }
}

void checkUnit(double v, const char* name) {
  if (!(v >= 0 && v <= 1)) throw ConfigError(std::string("corpus spec: ") + name + " must lie in [0, 1]");
}

}  // namespace

void CorpusSpec::validate() const {
  checkRange(classes, 1, "classes");
  checkRange(roles, 1, "roles");
  checkRange(axioms, 1, "axioms");
  checkRange(quantifierDepth, 0, "quantifierDepth");
  checkRange(chainLength, 1, "chainLength");
  checkUnit(disjunctionDensity, "disjunctionDensity");
  checkUnit(orderingSensitiveFraction, "orderingSensitiveFraction");
  if (verifyBudget == 0) throw ConfigError("corpus spec: verifyBudget must be positive");
}

CorpusSpec parseCorpusSpec(std::string_view text) {
  using nlohmann::json;
  CorpusSpec s;
  try {
    auto j = json::parse(text.begin(), text.end());
    if (!j.is_object()) throw ConfigError("corpus spec must be a JSON object");
    auto range = [&](const char* key, IntRange& r) {
      if (!j.contains(key)) return;
      auto v = j.at(key).get<std::vector<int>>();
      if (v.size() != 2) throw ConfigError(std::string("corpus spec: ") + key + " needs [lo, hi]");
      r = {v[0], v[1]};
    };
    for (const auto& [key, value] : j.items()) {
      static const std::vector<std::string> known = {"count",           "seed",
                                                     "classes",         "roles",
                                                     "axioms",          "disjunctionDensity",
                                                     "quantifierDepth", "orderingSensitiveFraction",
                                                     "chainLength",     "verifyBudget"};
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw ConfigError("corpus spec: unknown field '" + key + "'");
      }
    }
    if (j.contains("count")) s.count = j.at("count").get<std::size_t>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    range("classes", s.classes);
    range("roles", s.roles);
    range("axioms", s.axioms);
    range("quantifierDepth", s.quantifierDepth);
    range("chainLength", s.chainLength);
    if (j.contains("disjunctionDensity")) s.disjunctionDensity = j.at("disjunctionDensity").get<double>();
    if (j.contains("orderingSensitiveFraction")) {
      s.orderingSensitiveFraction = j.at("orderingSensitiveFraction").get<double>();
    }
    if (j.contains("verifyBudget")) s.verifyBudget = j.at("verifyBudget").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("corpus spec: ") + e.what());
  }
  s.validate();
  return s;
}

CorpusSpec loadCorpusSpec(const std::filesystem::path& path) { return parseCorpusSpec(readTextFile(path)); }

std::string corpusSpecJson(const CorpusSpec& s) {
  nlohmann::json j;
  j["count"] = s.count;
  j["seed"] = s.seed;
  j["classes"] = {s.classes.lo, s.classes.hi};
  j["roles"] = {s.roles.lo, s.roles.hi};
  j["axioms"] = {s.axioms.lo, s.axioms.hi};
  j["disjunctionDensity"] = s.disjunctionDensity;
  j["quantifierDepth"] = {s.quantifierDepth.lo, s.quantifierDepth.hi};
  j["orderingSensitiveFraction"] = s.orderingSensitiveFraction;
  j["chainLength"] = {s.chainLength.lo, s.chainLength.hi};
  j["verifyBudget"] = s.verifyBudget;
  return j.dump(1) + "\n";
}

std::string toText(CorpusFamily f) {
  switch (f) {
    case CorpusFamily::Random: return "random";
    case CorpusFamily::SmallTrap: return "small-trap";
    case CorpusFamily::LargeTrap: return "large-trap";
    case CorpusFamily::GeneratingTrap: return "generating-trap";
    case CorpusFamily::FrequencyTrap: return "frequency-trap";
    case CorpusFamily::Unknown: return "unknown";
  }
  return "unknown";
}

CorpusFamily parseCorpusFamily(std::string_view s) {
  for (auto f : {CorpusFamily::Random, CorpusFamily::SmallTrap, CorpusFamily::LargeTrap,
                 CorpusFamily::GeneratingTrap, CorpusFamily::FrequencyTrap}) {
    if (toText(f) == s) return f;
  }
  return CorpusFamily::Unknown;
}

// ---- generation

namespace {

// Portable draws: the standard distributions differ between libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  int in(const IntRange& r) { return r.lo + static_cast<int>(below(static_cast<std::size_t>(r.hi - r.lo + 1))); }
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class RandomConcepts {
 public:
  RandomConcepts(Draw& draw, std::vector<std::string> classes, std::vector<std::string> roles, double density)
      : draw_(draw), classes_(std::move(classes)), roles_(std::move(roles)), density_(density) {}

  Concept literal() {
    auto a = Concept::atomic(classes_[draw_.below(classes_.size())]);
    return draw_.chance(0.25) ? Concept::negation(a) : a;
  }

  Concept expr(int quantifiers, int booleans) {
    if (booleans <= 0 && quantifiers <= 0) return literal();
    if (draw_.chance(0.3)) return literal();
    if (booleans > 0 && draw_.chance(density_)) {
      std::vector<Concept> kids;
      auto n = 2 + draw_.below(2);
      for (std::size_t i = 0; i < n; ++i) kids.push_back(expr(quantifiers, booleans - 1));
      return Concept::disjunction(std::move(kids));
    }
    auto pick = draw_.below(quantifiers > 0 ? 3 : 1);
    if (pick == 0 && booleans > 0) {
      return Concept::conjunction({expr(quantifiers, booleans - 1), expr(quantifiers, booleans - 1)});
    }
    if (quantifiers <= 0) return literal();
    auto role = roles_[draw_.below(roles_.size())];
    auto filler = expr(quantifiers - 1, booleans);
    return pick == 1 ? Concept::some(role, filler) : Concept::all(role, filler);
  }

  Concept atom() { return Concept::atomic(classes_[draw_.below(classes_.size())]); }

 private:
  Draw& draw_;
  std::vector<std::string> classes_;
  std::vector<std::string> roles_;
  double density_;
};

std::vector<std::string> names(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void addRandomAxioms(Ontology& o, RandomConcepts& gen, Draw& draw, int count, int qdepth, bool allowGci) {
  for (int i = 0; i < count; ++i) {
    auto kind = draw.below(10);
    auto lhs = allowGci && draw.chance(0.2) ? gen.expr(std::min(qdepth, 1), 1) : gen.atom();
    auto rhs = gen.expr(qdepth, 2);
    if (kind < 7) {
      o.add(TBoxAxiom{TBoxAxiom::Kind::Subsumption, lhs, rhs});
    } else if (kind < 9) {
      o.add(TBoxAxiom{TBoxAxiom::Kind::Equivalence, lhs, rhs});
    } else {
      o.add(TBoxAxiom{TBoxAxiom::Kind::Disjointness, lhs, rhs});
    }
  }
}

Ontology randomOntology(const CorpusSpec& spec, Draw& draw) {
  auto classes = names("A", draw.in(spec.classes));
  auto roles = names("r", draw.in(spec.roles));
  Ontology o;
  for (const auto& c : classes) o.declareClass(c);
  RandomConcepts gen(draw, classes, roles, spec.disjunctionDensity);
  addRandomAxioms(o, gen, draw, draw.in(spec.axioms), draw.in(spec.quantifierDepth), true);
  return o;
}

std::string ontologyText(CorpusFamily family, const Ontology& o) {
  return "; family: " + toText(family) + "\n" + unparse(o);
}

struct Check {
  bool ok = false;
  std::uint64_t minSteps = 0;
  std::uint64_t maxSteps = 0;
};

// Consistency and a nondeterministic vertex; with `needGap` also the 10x
// spread across the twelve configs.
Check verify(const std::string& text, std::uint64_t budget, bool needGap) {
  Check c;
  auto o = parseOntology(text);
  auto dag = std::make_shared<const Dag>(encodeDag(o));
  if (nondeterministicVertices(*dag).empty()) return c;
  auto base = applyOrdering(dag, HeuristicConfig::fromNumber(1));
  if (checkTBoxConsistency(base, budget).outcome != SatOutcome::Satisfiable) return c;
  if (!needGap) {
    c.ok = true;
    return c;
  }
  c.minSteps = budget;
  for (int cfg = 1; cfg <= HeuristicConfig::kCount; ++cfg) {
    auto sweep = satisfiabilitySweep(applyOrdering(dag, HeuristicConfig::fromNumber(cfg)), budget, budget);
    auto steps = sweep.timedOut ? budget : sweep.totalSteps;
    c.minSteps = std::min(c.minSteps, steps);
    c.maxSteps = std::max(c.maxSteps, steps);
  }
  c.ok = c.maxSteps >= 10 * std::max<std::uint64_t>(c.minSteps, 1);
  return c;
}

constexpr int kAttempts = 200;

}  // namespace

std::string orderingTrap(CorpusFamily family, int chainLength, std::uint64_t seed) {
  if (!isOrderingSensitive(family)) throw ConfigError("orderingTrap needs a trap family");
  if (chainLength < 1) throw ConfigError("chain length must be positive");
  Draw draw(seed);
  bool frequentGood = draw.chance(0.5);
  std::string root = "(implies Root (and";
  root += family == CorpusFamily::GeneratingTrap ? " (all s NK)" : " (some r Q)";
  std::string rest;
  for (int i = 1; i <= chainLength; ++i) {
    auto k = std::to_string(i);
    std::string wrong, right;
    switch (family) {
      case CorpusFamily::SmallTrap:
        wrong = "T" + k;
        right = "(and Y" + k + " (all s Z" + k + "))";
        break;
      case CorpusFamily::LargeTrap:
        wrong = "(and T" + k + " W" + k + " V" + k + ")";
        right = "G" + k;
        break;
      case CorpusFamily::GeneratingTrap:
        wrong = "(some s K" + k + ")";
        right = "(and Y" + k + " W" + k + ")";
        rest += "(implies K" + k + " K)\n";
        break;
      default:
        wrong = "T" + k;
        right = "G" + k;
        if (frequentGood) {
          rest += "(implies G" + k + " M1)\n(implies G" + k + " M2)\n";
        }
        break;
    }
    if (family != CorpusFamily::GeneratingTrap) {
      rest += "(implies T" + k + " (all r P" + k + "))\n(implies P" + k + " (not Q))\n";
    }
    root += draw.chance(0.5) ? " (or " + wrong + " " + right + ")" : " (or " + right + " " + wrong + ")";
  }
  root += "))\n";
  if (family == CorpusFamily::GeneratingTrap) rest += "(implies NK (not K))\n";
  return root + rest;
}

std::vector<CorpusEntry> generateCorpus(const CorpusSpec& spec) {
  spec.validate();
  std::vector<CorpusEntry> out;
  if (spec.count == 0) return out;

  // Which positions hold crafted instances.
  auto crafted = static_cast<std::size_t>(std::llround(static_cast<double>(spec.count) * spec.orderingSensitiveFraction));
  std::vector<std::size_t> order(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) order[i] = i;
  // Derived seed, so a split drawn with the same seed is unrelated.
  seededShuffle(order, mix(~spec.seed, 0));
  std::vector<bool> isCrafted(spec.count, false);
  for (std::size_t i = 0; i < crafted; ++i) isCrafted[order[i]] = true;

  auto width = std::max<std::size_t>(4, std::to_string(spec.count).size());
  static const CorpusFamily traps[] = {CorpusFamily::SmallTrap, CorpusFamily::LargeTrap,
                                       CorpusFamily::GeneratingTrap, CorpusFamily::FrequencyTrap};
  for (std::size_t i = 0; i < spec.count; ++i) {
    auto number = std::to_string(i + 1);
    CorpusEntry e;
    e.id = "onto-" + std::string(width - number.size(), '0') + number;
    Draw draw(mix(spec.seed, i));
    bool done = false;
    for (int attempt = 0; attempt < kAttempts && !done; ++attempt) {
      if (isCrafted[i]) {
        e.family = traps[draw.below(4)];
        auto text = orderingTrap(e.family, draw.in(spec.chainLength), draw.next());
        auto o = parseOntology(text);
        // A little unrelated background in its own vocabulary.
        auto extra = static_cast<int>(draw.below(3));
        if (extra > 0) {
          auto classes = names("N", 4);
          auto roles = names("t", 1);
          RandomConcepts gen(draw, classes, roles, spec.disjunctionDensity);
          addRandomAxioms(o, gen, draw, extra, 1, false);
        }
        e.text = ontologyText(e.family, o);
        done = verify(e.text, spec.verifyBudget, true).ok;
      } else {
        e.family = CorpusFamily::Random;
        e.text = ontologyText(e.family, randomOntology(spec, draw));
        done = verify(e.text, spec.verifyBudget, false).ok;
      }
    }
    if (!done) {
      throw GenerationError("could not generate " + e.id + " (" + toText(e.family) + ") within " +
                            std::to_string(kAttempts) + " attempts");
    }
    out.push_back(std::move(e));
  }
  return out;
}

void writeCorpus(const std::filesystem::path& dir, const std::vector<CorpusEntry>& corpus) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& e : corpus) {
    auto text = e.text;
    if (text.rfind("; family:", 0) != 0) text = "; family: " + toText(e.family) + "\n" + text;
    writeTextFile(dir / (e.id + ".krss"), text);
  }
}

std::vector<CorpusEntry> readCorpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("corpus directory " + dir.string() + " does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.is_regular_file() && f.path().extension() == ".krss") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    CorpusEntry e;
    e.id = f.stem().string();
    e.text = readTextFile(f);
    std::string_view head = e.text;
    if (head.rfind("; family: ", 0) == 0) {
      auto end = head.find('\n');
      e.family = parseCorpusFamily(head.substr(10, end == std::string_view::npos ? end : end - 10));
    }
    out.push_back(std::move(e));
  }
  return out;
}

// ---- benchmark

namespace {

RuntimeRow measure(const std::string& id, int config, const std::shared_ptr<const Dag>& dag,
                   const BenchOptions& options) {
  auto ordered = applyOrdering(dag, HeuristicConfig::fromNumber(config));
  RuntimeRow row;
  row.id = id;
  row.config = config;
  auto budget = static_cast<double>(options.budget);
  if (options.mode == CostMode::Steps) {
    auto sweep = satisfiabilitySweep(ordered, options.budget, options.budget);
    if (sweep.timedOut) {
      row.outcome = RunOutcome::Timeout;
      row.cost = budget;
    } else {
      row.outcome = sweep.consistency.outcome == SatOutcome::Unsatisfiable ? RunOutcome::Inconsistent
                                                                           : RunOutcome::Finished;
      row.cost = static_cast<double>(sweep.totalSteps);
    }
  } else {
    auto sweep = satisfiabilitySweep(ordered, options.stepLimit, options.stepLimit);
    if (sweep.timedOut || sweep.elapsedMs >= budget) {
      row.outcome = RunOutcome::Timeout;
      row.cost = budget;
    } else {
      row.outcome = sweep.consistency.outcome == SatOutcome::Unsatisfiable ? RunOutcome::Inconsistent
                                                                           : RunOutcome::Finished;
      row.cost = sweep.elapsedMs;
    }
  }
  return row;
}

struct Job {
  bool parsed = false;
  std::string error;
  FeatureVector features;
  std::vector<std::vector<RuntimeRow>> rows;  // [repeat][config position]
  RuntimeRow standard;
};

}  // namespace

BenchmarkResult runBenchmark(const std::vector<CorpusEntry>& corpus, const BenchOptions& options) {
  if (corpus.empty()) throw ConfigError("benchmark needs a non-empty corpus");
  if (options.budget == 0) throw ConfigError("budget must be positive");
  for (int c : options.configs) {
    if (c < 1 || c > HeuristicConfig::kCount) throw ConfigError("config " + std::to_string(c) + " outside 1..12");
  }
  auto repeats = options.mode == CostMode::Steps ? std::size_t{1} : std::max<std::size_t>(options.repeats, 1);

  std::vector<Job> jobs(corpus.size());
  auto work = [&](std::size_t i) {
    auto& job = jobs[i];
    const auto& e = corpus[i];
    std::shared_ptr<const Dag> dag;
    try {
      auto o = parseOntology(e.text);
      dag = std::make_shared<const Dag>(encodeDag(o));
      job.features = extractFeatures(o, *dag);
    } catch (const Error& err) {
      job.error = err.what();
      return;
    }
    job.parsed = true;
    job.rows.resize(repeats);
    for (std::size_t r = 0; r < repeats; ++r) {
      for (int c : options.configs) job.rows[r].push_back(measure(e.id, c, dag, options));
    }
    auto def = defaultConfig(job.features, options.defaults).number();
    auto pos = std::find(options.configs.begin(), options.configs.end(), def);
    job.standard = pos != options.configs.end() ? job.rows[0][static_cast<std::size_t>(pos - options.configs.begin())]
                                                : measure(e.id, def, dag, options);
  };

  auto threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(corpus.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (auto i = next++; i < corpus.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  BenchmarkResult result;
  result.runs.resize(repeats);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& job = jobs[i];
    if (!job.parsed) {
      result.failures.push_back({corpus[i].id, job.error});
      continue;
    }
    result.features.emplace_back(corpus[i].id, job.features);
    for (std::size_t r = 0; r < repeats; ++r) {
      for (const auto& row : job.rows[r]) result.runs[r].rows.push_back(row);
    }
    for (std::size_t k = 0; k < options.configs.size(); ++k) {
      std::vector<const RuntimeRow*> samples;
      for (std::size_t r = 0; r < repeats; ++r) samples.push_back(&job.rows[r][k]);
      std::stable_sort(samples.begin(), samples.end(), [](auto a, auto b) { return a->cost < b->cost; });
      result.runtimes.rows.push_back(*samples[(samples.size() - 1) / 2]);
    }
    result.standard.rows.push_back(job.standard);
  }
  auto budget = static_cast<double>(options.budget);
  result.runtimes.timeoutBudget = budget;
  result.standard.timeoutBudget = budget;
  for (auto& t : result.runs) t.timeoutBudget = budget;
  return result;
}

// ---- filtering

std::string toText(ExclusionReason r) {
  switch (r) {
    case ExclusionReason::AllTimeout: return "AllTimeout";
    case ExclusionReason::Inconsistent: return "Inconsistent";
    case ExclusionReason::Unstable: return "Unstable";
  }
  return "?";
}

namespace {

struct Extremes {
  int fastest = 0;
  int slowest = 0;
  bool close = false;
};

Extremes extremes(const std::vector<const RuntimeRow*>& rows, double closeness) {
  Extremes x;
  const RuntimeRow* lo = nullptr;
  const RuntimeRow* hi = nullptr;
  for (auto r : rows) {
    if (!lo || r->cost < lo->cost) lo = r;
    if (!hi || r->cost > hi->cost) hi = r;
  }
  x.fastest = lo->config;
  x.slowest = hi->config;
  x.close = hi->cost - lo->cost < closeness * lo->cost;
  return x;
}

}  // namespace

FilterResult filterEligible(const RuntimeTable& t, const std::vector<RuntimeTable>& repeats, double closeness) {
  FilterResult out;
  out.kept.timeoutBudget = t.timeoutBudget;

  std::map<std::string, std::vector<const RuntimeRow*>> rowsOf;
  for (const auto& row : t.rows) rowsOf[row.id].push_back(&row);
  std::map<std::string, std::vector<std::vector<const RuntimeRow*>>> repeatRows;
  for (std::size_t r = 0; r < repeats.size(); ++r) {
    for (const auto& row : repeats[r].rows) {
      auto& per = repeatRows[row.id];
      per.resize(repeats.size());
      per[r].push_back(&row);
    }
  }

  for (const auto& id : t.ids()) {
    const auto& rows = rowsOf.at(id);
    bool allTimeout = std::all_of(rows.begin(), rows.end(), [](auto r) { return r->outcome == RunOutcome::Timeout; });
    bool inconsistent =
        std::any_of(rows.begin(), rows.end(), [](auto r) { return r->outcome == RunOutcome::Inconsistent; });
    if (inconsistent) {
      out.excluded.push_back({id, ExclusionReason::Inconsistent, "consistency check failed"});
      continue;
    }
    if (allTimeout) {
      out.excluded.push_back({id, ExclusionReason::AllTimeout, std::to_string(rows.size()) + " configs timed out"});
      continue;
    }
    if (repeats.size() >= 2) {
      auto it = repeatRows.find(id);
      bool anyClose = false;
      bool agree = it != repeatRows.end();
      if (agree) {
        Extremes ref;
        for (std::size_t r = 0; r < it->second.size(); ++r) {
          const auto& per = it->second[r];
          if (per.empty()) {
            agree = false;
            continue;
          }
          auto x = extremes(per, closeness);
          anyClose = anyClose || x.close;
          if (r == 0) {
            ref = x;
          } else if (x.fastest != ref.fastest || x.slowest != ref.slowest) {
            agree = false;
          }
        }
      }
      if (!agree && (anyClose || it == repeatRows.end())) {
        out.excluded.push_back({id, ExclusionReason::Unstable, "fastest/slowest config differs across repeats"});
        continue;
      }
    }
    for (auto r : rows) out.kept.rows.push_back(*r);
  }
  return out;
}

std::string exclusionCsv(const std::vector<Exclusion>& log) {
  std::string out = "id,reason,detail\n";
  for (const auto& e : log) {
    checkCsvField(e.id);
    auto detail = e.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    out += e.id + ',' + toText(e.reason) + ',' + detail + '\n';
  }
  return out;
}

// ---- split

IdSplit splitTrainTest(const std::vector<std::string>& ids, double testFraction, std::uint64_t seed) {
  if (!(testFraction > 0 && testFraction < 1)) throw ConfigError("test fraction must lie strictly between 0 and 1");
  auto n = ids.size();
  if (n < 4) throw TooFewExamples(std::to_string(n) + " ontologies; a split needs at least 4");
  auto testCount = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * testFraction - 1e-9));
  testCount = std::clamp<std::size_t>(testCount, 1, n - 1);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  seededShuffle(order, seed);
  std::vector<bool> inTest(n, false);
  for (std::size_t i = 0; i < testCount; ++i) inTest[order[i]] = true;
  IdSplit s;
  for (std::size_t i = 0; i < n; ++i) (inTest[i] ? s.test : s.train).push_back(ids[i]);
  return s;
}

RuntimeTable restrictTo(const RuntimeTable& t, const std::vector<std::string>& ids) {
  std::set<std::string_view> keep(ids.begin(), ids.end());
  RuntimeTable out;
  out.timeoutBudget = t.timeoutBudget;
  for (const auto& r : t.rows) {
    if (keep.count(r.id)) out.rows.push_back(r);
  }
  return out;
}

std::vector<FeatureRow> restrictTo(const std::vector<FeatureRow>& rows, const std::vector<std::string>& ids) {
  std::set<std::string_view> keep(ids.begin(), ids.end());
  std::vector<FeatureRow> out;
  for (const auto& r : rows) {
    if (keep.count(r.first)) out.push_back(r);
  }
  return out;
}

}  // namespace dlorder
