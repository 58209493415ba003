#include "dlorder/krss.hpp"

#include <array>
#include <cstddef>
#include <sstream>
#include <vector>

#include "dlorder/error.hpp"

namespace dlorder {

namespace {

struct SExpr {
  bool isList = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> readAll() {
    std::vector<SExpr> out;
    skipBlank();
    while (pos_ < text_.size()) {
      out.push_back(readOne());
      skipBlank();
    }
    return out;
  }

 private:
  SExpr readOne() {
    SExpr e;
    e.line = line_;
    e.column = column_;
    char ch = text_[pos_];
    if (ch == ')') throw SyntaxError(line_, column_, "unexpected ')'");
    if (ch == '(') {
      e.isList = true;
      advance();
      skipBlank();
      while (true) {
        if (pos_ >= text_.size()) throw SyntaxError(e.line, e.column, "unterminated list");
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        e.items.push_back(readOne());
        skipBlank();
      }
      return e;
    }
    while (pos_ < text_.size()) {
      ch = text_[pos_];
      if (ch == '(' || ch == ')' || ch == ';' || isBlank(ch)) break;
      e.atom.push_back(ch);
      advance();
    }
    return e;
  }

  static bool isBlank(char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; }

  void skipBlank() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (isBlank(ch)) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Operators and axioms of richer description logics. Rejected explicitly so
// they are never silently dropped.
constexpr std::array kUnsupported = {
    "one-of",     "at-least",   "at-most",     "exactly",    "min",       "max",
    "inv",        "inverse",    "self",        "has-value",  "functional", "inverse-of",
    "same-as",    "different-from", "implies-role-chain", "data-some", "data-all",
};

bool isUnsupported(const std::string& head) {
  for (const char* op : kUnsupported) {
    if (head == op) return true;
  }
  return false;
}

[[noreturn]] void fail(const SExpr& e, const std::string& message) {
  throw SyntaxError(e.line, e.column, message);
}

std::string nameOf(const SExpr& e, const char* what) {
  if (e.isList) fail(e, std::string("expected ") + what + " name, found list");
  if (!isValidName(e.atom)) fail(e, std::string("invalid ") + what + " name '" + e.atom + "'");
  return e.atom;
}

const std::string& headOf(const SExpr& e) {
  if (e.items.empty()) fail(e, "empty list");
  const auto& head = e.items.front();
  if (head.isList) fail(head, "expected operator");
  return head.atom;
}

void expectArity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n + 1) {
    fail(e, "'" + e.items.front().atom + "' expects " + std::to_string(n) + " operand(s)");
  }
}

Concept toConcept(const SExpr& e) {
  if (!e.isList) {
    if (e.atom == "*top*") return Concept::top();
    if (e.atom == "*bottom*") return Concept::bottom();
    return Concept::atomic(nameOf(e, "class"));
  }
  const auto& head = headOf(e);
  if (head == "not") {
    expectArity(e, 1);
    return Concept::negation(toConcept(e.items[1]));
  }
  if (head == "and" || head == "or") {
    if (e.items.size() < 3) fail(e, "'" + head + "' expects at least two operands");
    std::vector<Concept> children;
    for (std::size_t i = 1; i < e.items.size(); ++i) children.push_back(toConcept(e.items[i]));
    return head == "and" ? Concept::conjunction(std::move(children))
                         : Concept::disjunction(std::move(children));
  }
  if (head == "some" || head == "all") {
    expectArity(e, 2);
    auto role = nameOf(e.items[1], "role");
    auto filler = toConcept(e.items[2]);
    return head == "some" ? Concept::some(std::move(role), std::move(filler))
                          : Concept::all(std::move(role), std::move(filler));
  }
  if (isUnsupported(head)) {
    throw UnsupportedConstruct(std::to_string(e.line) + ":" + std::to_string(e.column) +
                               ": '" + head + "' is outside ALC");
  }
  fail(e, "unknown concept operator '" + head + "'");
}

void addAxiom(Ontology& o, const SExpr& e) {
  if (!e.isList) fail(e, "expected axiom, found '" + e.atom + "'");
  const auto& head = headOf(e);
  if (head == "implies" || head == "equivalent" || head == "disjoint") {
    expectArity(e, 2);
    auto kind = head == "implies"      ? TBoxAxiom::Kind::Subsumption
                : head == "equivalent" ? TBoxAxiom::Kind::Equivalence
                                       : TBoxAxiom::Kind::Disjointness;
    o.add(TBoxAxiom{kind, toConcept(e.items[1]), toConcept(e.items[2])});
  } else if (head == "implies-role") {
    expectArity(e, 2);
    o.add(RBoxAxiom{RBoxAxiom::Kind::RoleInclusion, nameOf(e.items[1], "role"),
                    nameOf(e.items[2], "role")});
  } else if (head == "transitive") {
    expectArity(e, 1);
    o.add(RBoxAxiom{RBoxAxiom::Kind::Transitivity, nameOf(e.items[1], "role"), {}});
  } else if (head == "instance") {
    expectArity(e, 2);
    ABoxAxiom ax;
    ax.kind = ABoxAxiom::Kind::ConceptAssertion;
    ax.individual = nameOf(e.items[1], "individual");
    ax.classExpr = toConcept(e.items[2]);
    o.add(std::move(ax));
  } else if (head == "related") {
    expectArity(e, 3);
    ABoxAxiom ax;
    ax.kind = ABoxAxiom::Kind::RoleAssertion;
    ax.individual = nameOf(e.items[1], "individual");
    ax.target = nameOf(e.items[2], "individual");
    ax.role = nameOf(e.items[3], "role");
    o.add(std::move(ax));
  } else if (isUnsupported(head)) {
    throw UnsupportedConstruct(std::to_string(e.line) + ":" + std::to_string(e.column) +
                               ": '" + head + "' is outside ALC");
  } else {
    fail(e, "unknown axiom '" + head + "'");
  }
}

void print(std::ostream& os, const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
      os << "*top*";
      return;
    case K::Bottom:
      os << "*bottom*";
      return;
    case K::Atomic:
      os << c.name();
      return;
    case K::Not:
      os << "(not ";
      print(os, c.child());
      os << ')';
      return;
    case K::And:
    case K::Or:
      os << (c.is(K::And) ? "(and" : "(or");
      for (const auto& child : c.children()) {
        os << ' ';
        print(os, child);
      }
      os << ')';
      return;
    case K::Some:
    case K::All:
      os << (c.is(K::Some) ? "(some " : "(all ") << c.name() << ' ';
      print(os, c.child());
      os << ')';
      return;
  }
}

}  // namespace

Ontology parseOntology(std::string_view text) {
  Ontology o;
  for (const auto& e : Reader(text).readAll()) addAxiom(o, e);
  return o;
}

Concept parseConcept(std::string_view text) {
  auto exprs = Reader(text).readAll();
  if (exprs.size() != 1) throw SyntaxError(1, 1, "expected exactly one concept expression");
  return toConcept(exprs.front());
}

std::string toText(const Concept& c) {
  std::ostringstream os;
  print(os, c);
  return os.str();
}

std::string unparse(const Ontology& o) {
  std::ostringstream os;
  for (const auto& ax : o.tbox()) {
    const char* head = ax.kind == TBoxAxiom::Kind::Subsumption   ? "implies"
                       : ax.kind == TBoxAxiom::Kind::Equivalence ? "equivalent"
                                                                 : "disjoint";
    os << '(' << head << ' ';
    print(os, ax.lhs);
    os << ' ';
    print(os, ax.rhs);
    os << ")\n";
  }
  for (const auto& ax : o.rbox()) {
    if (ax.kind == RBoxAxiom::Kind::RoleInclusion) {
      os << "(implies-role " << ax.sub << ' ' << ax.sup << ")\n";
    } else {
      os << "(transitive " << ax.sub << ")\n";
    }
  }
  for (const auto& ax : o.abox()) {
    if (ax.kind == ABoxAxiom::Kind::ConceptAssertion) {
      os << "(instance " << ax.individual << ' ';
      print(os, ax.classExpr);
      os << ")\n";
    } else {
      os << "(related " << ax.individual << ' ' << ax.target << ' ' << ax.role << ")\n";
    }
  }
  return os.str();
}

}  // namespace dlorder
