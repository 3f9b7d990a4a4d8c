#include "scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>

#include "errors.hpp"
#include "numeric.hpp"

namespace ccvms::scenario {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

bool is_ident(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;
  int line = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line, static_cast<int>(pos) + 1);
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool keyword(const char* word) {
    skip_ws();
    const std::size_t len = std::strlen(word);
    if (text.compare(pos, len, word) != 0) return false;
    if (pos + len < text.size() && is_ident(text[pos + len])) return false;
    pos += len;
    return true;
  }

  double parse_all() {
    const double v = expr();
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing characters in expression");
    return v;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        const double d = factor();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double factor() {
    if (eat('-')) return -factor();
    return primary();
  }

  double primary() {
    skip_ws();
    if (pos >= text.size()) fail("expected a value");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      const double v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return number();
    if (keyword("ln")) {
      if (!eat('(')) fail("ln needs a parenthesized argument");
      const double v = expr();
      if (!eat(')')) fail("expected ')' after ln argument");
      if (v <= 0.0) fail("ln of a nonpositive value");
      return std::log(v);
    }
    if (keyword("pi")) return kPi;
    if (keyword("e")) return kE;
    fail(std::string("unexpected character '") + c + "'");
  }

  double number() {
    const std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    }
    // scientific suffix only when it is unambiguous: e/E followed by
    // an optional sign and a digit; a bare 'e' stays the constant
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      std::size_t probe = pos + 1;
      if (probe < text.size() && (text[probe] == '+' || text[probe] == '-'))
        ++probe;
      if (probe < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[probe])))
        pos = probe + 1;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    }
    return std::strtod(text.substr(start, pos - start).c_str(), nullptr);
  }
};

double eval_in_line(const std::string& text, int line) {
  ExprParser p{text, 0, line};
  return p.parse_all();
}

// split on commas at bracket depth zero
std::vector<std::string> split_top_level(const std::string& s, int line) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets", line, 1);
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets", line, 1);
  out.push_back(cur);
  return out;
}

std::string strip_outer(const std::string& s, char open, char close, int line) {
  const std::string t = trim(s);
  if (t.size() < 2 || t.front() != open || t.back() != close)
    throw ParseError(std::string("expected a literal wrapped in ") + open +
                         close,
                     line, 1);
  return t.substr(1, t.size() - 2);
}

space::Point parse_point(const std::string& raw, int line) {
  const std::string t = trim(raw);
  if (t.empty()) throw ParseError("empty point literal", line, 1);
  if (t.front() == '(' || t.front() == '[') {
    const char close = t.front() == '(' ? ')' : ']';
    const auto parts = split_top_level(strip_outer(t, t.front(), close, line), line);
    std::vector<double> coords;
    coords.reserve(parts.size());
    for (const auto& part : parts) coords.push_back(eval_in_line(part, line));
    return space::Point(std::move(coords));
  }
  return space::Point::scalar(eval_in_line(t, line));
}

algebra::Element parse_element(const std::string& raw,
                               const algebra::Descriptor& desc, int line) {
  const std::string t = trim(raw);
  if (t.empty()) throw ParseError("empty element literal", line, 1);
  if (t.front() == '(') {
    // tuple-style literal, only sensible for the vector algebras
    if (desc.is_matrix())
      throw ParseError("matrix elements are written as nested [[...]] rows",
                       line, 1);
    const auto parts = split_top_level(strip_outer(t, '(', ')', line), line);
    if (static_cast<int>(parts.size()) != desc.dim)
      throw ParseError("expected " + std::to_string(desc.dim) +
                           " components, got " + std::to_string(parts.size()),
                       line, 1);
    std::vector<double> values;
    values.reserve(parts.size());
    for (const auto& part : parts) values.push_back(eval_in_line(part, line));
    return algebra::Element(desc, std::move(values));
  }
  if (t.front() != '[')
    return algebra::scalar(desc, eval_in_line(t, line));

  const auto items = split_top_level(strip_outer(t, '[', ']', line), line);
  const bool nested = !items.empty() && trim(items.front()).size() > 0 &&
                      trim(items.front()).front() == '[';
  if (nested) {
    if (!desc.is_matrix())
      throw ParseError("matrix literal for the non-matrix algebra " +
                           desc.label(),
                       line, 1);
    if (static_cast<int>(items.size()) != desc.dim)
      throw ParseError("expected " + std::to_string(desc.dim) +
                           " rows, got " + std::to_string(items.size()),
                       line, 1);
    std::vector<double> values;
    values.reserve(desc.value_count());
    for (const auto& row : items) {
      const auto cells = split_top_level(strip_outer(row, '[', ']', line), line);
      if (static_cast<int>(cells.size()) != desc.dim)
        throw ParseError("expected " + std::to_string(desc.dim) +
                             " columns, got " + std::to_string(cells.size()),
                         line, 1);
      for (const auto& cell : cells) values.push_back(eval_in_line(cell, line));
    }
    return algebra::Element(desc, std::move(values));
  }

  if (desc.is_matrix())
    throw ParseError("flat list for the matrix algebra " + desc.label() +
                         "; write nested rows",
                     line, 1);
  if (static_cast<int>(items.size()) != desc.dim)
    throw ParseError("expected " + std::to_string(desc.dim) +
                         " components, got " + std::to_string(items.size()),
                     line, 1);
  std::vector<double> values;
  values.reserve(items.size());
  for (const auto& item : items) values.push_back(eval_in_line(item, line));
  return algebra::Element(desc, std::move(values));
}

bool parse_bool(const std::string& raw, int line) {
  const std::string t = trim(raw);
  if (t == "true" || t == "1") return true;
  if (t == "false" || t == "0") return false;
  throw ParseError("expected true or false, got '" + t + "'", line, 1);
}

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
};

struct RawDoc {
  // section name -> entries, in file order
  std::vector<std::pair<std::string, std::vector<Entry>>> sections;

  const std::vector<Entry>* find(const std::string& name) const {
    for (const auto& [sec, entries] : sections)
      if (sec == name) return &entries;
    return nullptr;
  }
};

RawDoc tokenize(const std::string& text) {
  static const std::vector<std::string> known = {
      "scenario", "algebra", "space", "circle", "circle2", "mapping", "check"};
  RawDoc doc;
  std::istringstream in(text);
  std::string rawline;
  int lineno = 0;
  std::string current;
  while (std::getline(in, rawline)) {
    ++lineno;
    const auto hash = rawline.find('#');
    if (hash != std::string::npos) rawline.erase(hash);
    const std::string lineText = trim(rawline);
    if (lineText.empty()) continue;
    if (lineText.front() == '[') {
      if (lineText.back() != ']')
        throw ParseError("expected ']' to close the section header", lineno,
                         static_cast<int>(lineText.size()));
      current = trim(lineText.substr(1, lineText.size() - 2));
      if (std::find(known.begin(), known.end(), current) == known.end())
        throw ParseError("unknown section [" + current + "]", lineno, 1);
      for (const auto& [sec, entries] : doc.sections)
        if (sec == current)
          throw ParseError("duplicate section [" + current + "]", lineno, 1);
      doc.sections.emplace_back(current, std::vector<Entry>{});
      continue;
    }
    if (current.empty())
      throw ParseError("key outside any [section]", lineno, 1);
    const auto eq = lineText.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value'", lineno, 1);
    Entry e{trim(lineText.substr(0, eq)), trim(lineText.substr(eq + 1)),
            lineno};
    if (e.key.empty())
      throw ParseError("empty key", lineno, 1);
    if (e.value.empty())
      throw ParseError("empty value for key '" + e.key + "'", lineno,
                       static_cast<int>(eq) + 2);
    doc.sections.back().second.push_back(std::move(e));
  }
  return doc;
}

const Entry* find_key(const std::vector<Entry>& entries,
                      const std::string& key) {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

void reject_unknown(const std::vector<Entry>& entries,
                    std::initializer_list<const char*> allowed,
                    const std::string& section) {
  for (const auto& e : entries) {
    bool ok = false;
    for (const char* k : allowed)
      if (e.key == k) ok = true;
    if (section == "mapping" && e.key.rfind("rule.", 0) == 0) ok = true;
    if (!ok)
      throw ParseError("unknown key '" + e.key + "' in [" + section + "]",
                       e.line, 1);
  }
}

space::Instance build_instance(const RawDoc& doc) {
  const auto* entries = doc.find("space");
  if (!entries) throw ParseError("missing [space] section", 1, 1);
  reject_unknown(*entries, {"kind", "alpha", "pieces", "ambient"}, "space");
  const Entry* kind = find_key(*entries, "kind");
  if (!kind) throw ParseError("[space] needs a kind", 1, 1);

  auto get_alpha = [&]() {
    const Entry* a = find_key(*entries, "alpha");
    return a ? eval_in_line(a->value, a->line) : 1.0;
  };

  try {
    if (kind->value == "real-line-diag")
      return space::Instance::real_line_diag(get_alpha());
    if (kind->value == "real-line-exp-diag")
      return space::Instance::real_line_exp_diag(get_alpha());
    if (kind->value == "real-line-discrete")
      return space::Instance::real_line_discrete();
    if (kind->value == "square-tuple") {
      const Entry* amb = find_key(*entries, "ambient");
      return space::Instance::square_tuple(
          amb ? parse_bool(amb->value, amb->line) : false);
    }
    if (kind->value == "stepfn") {
      const Entry* p = find_key(*entries, "pieces");
      if (!p) throw ParseError("stepfn space needs pieces", kind->line, 1);
      const double v = eval_in_line(p->value, p->line);
      if (v < 1 || v != std::floor(v))
        throw ParseError("pieces must be a positive integer", p->line, 1);
      return space::Instance::step_fn(static_cast<int>(v));
    }
  } catch (const ContractError& err) {
    // factory rejections become parse errors anchored at the space kind
    throw ParseError(err.what(), kind->line, 1);
  }
  throw ParseError("unknown space kind '" + kind->value + "'", kind->line, 1);
}

void check_algebra_section(const RawDoc& doc, const space::Instance& s) {
  const auto* entries = doc.find("algebra");
  if (!entries) return;  // derived from the space
  reject_unknown(*entries, {"kind", "dim", "pieces"}, "algebra");
  const Entry* kind = find_key(*entries, "kind");
  if (!kind) throw ParseError("[algebra] needs a kind", 1, 1);
  if (kind->value != algebra::kind_name(s.algebra_desc.kind))
    throw ParseError("algebra kind '" + kind->value + "' does not match " +
                         s.label() + ", which measures in " +
                         s.algebra_desc.label(),
                     kind->line, 1);
  const Entry* dim = find_key(*entries, "dim");
  if (!dim) dim = find_key(*entries, "pieces");
  if (dim) {
    const double v = eval_in_line(dim->value, dim->line);
    if (v != s.algebra_desc.dim)
      throw ParseError("algebra dimension " + trim(dim->value) +
                           " does not match " + s.algebra_desc.label(),
                       dim->line, 1);
  }
}

CircleSpec build_circle(const std::vector<Entry>& entries,
                        const space::Instance& s, const std::string& name) {
  reject_unknown(entries, {"center", "radius"}, name);
  const Entry* center = find_key(entries, "center");
  const Entry* radius = find_key(entries, "radius");
  if (!center || !radius)
    throw ParseError("[" + name + "] needs center and radius",
                     entries.empty() ? 1 : entries.front().line, 1);
  space::Point c = parse_point(center->value, center->line);
  if (c.dim() != s.point_dim())
    throw ParseError("center " + c.describe() + " has dimension " +
                         std::to_string(c.dim()) + ", expected " +
                         std::to_string(s.point_dim()),
                     center->line, 1);
  if (!s.contains(c))
    throw ParseError("center " + c.describe() + " is outside " + s.label(),
                     center->line, 1);
  return CircleSpec{std::move(c),
                    parse_element(radius->value, s.algebra_desc, radius->line)};
}

RegionSpec parse_region(const std::string& raw, int line) {
  const std::string t = trim(raw);
  if (t == "on_circle") return RegionSpec{RegionKind::OnCircle, std::nullopt};
  if (t == "not_on_circle")
    return RegionSpec{RegionKind::NotOnCircle, std::nullopt};
  if (t == "default") return RegionSpec{RegionKind::Default, std::nullopt};
  if (t.rfind("eq ", 0) == 0 || t.rfind("eq(", 0) == 0)
    return RegionSpec{RegionKind::Eq, parse_point(t.substr(2), line)};
  throw ParseError("unknown region '" + t + "'", line, 1);
}

RuleSpec parse_rule(const std::string& raw, int line) {
  const std::string t = trim(raw);
  RuleSpec rule;
  if (t == "identity") return rule;
  if (t == "reciprocal-or-zero") {
    rule.kind = space::RuleKind::ReciprocalOrZero;
    return rule;
  }
  if (t.rfind("constant ", 0) == 0 || t.rfind("constant(", 0) == 0) {
    rule.kind = space::RuleKind::Constant;
    rule.constant = parse_point(t.substr(8), line);
    return rule;
  }
  if (t.rfind("affine ", 0) == 0) {
    rule.kind = space::RuleKind::Affine;
    const auto parts = split_top_level(t.substr(7), line);
    if (parts.size() != 2)
      throw ParseError("affine needs two arguments: a, b", line, 1);
    rule.a = eval_in_line(parts[0], line);
    rule.b = eval_in_line(parts[1], line);
    return rule;
  }
  throw ParseError("unknown rule '" + t + "'", line, 1);
}

std::vector<ClauseSpec> build_mapping(const RawDoc& doc,
                                      const space::Instance& s,
                                      bool has_circle) {
  const auto* entries = doc.find("mapping");
  if (!entries) return {};
  reject_unknown(*entries, {}, "mapping");

  std::map<int, const Entry*> ordered;
  for (const auto& e : *entries) {
    const std::string suffix = e.key.substr(5);
    char* end = nullptr;
    const long n = std::strtol(suffix.c_str(), &end, 10);
    if (suffix.empty() || *end != '\0' || n < 1)
      throw ParseError("mapping keys look like rule.1, rule.2, ...; got '" +
                           e.key + "'",
                       e.line, 1);
    if (ordered.count(static_cast<int>(n)))
      throw ParseError("duplicate mapping key '" + e.key + "'", e.line, 1);
    ordered[static_cast<int>(n)] = &e;
  }

  std::vector<ClauseSpec> clauses;
  for (const auto& [n, e] : ordered) {
    const auto arrow = e->value.find("->");
    if (arrow == std::string::npos)
      throw ParseError("expected '<region> -> <rule>'", e->line,
                       static_cast<int>(e->value.size()));
    ClauseSpec clause{parse_region(e->value.substr(0, arrow), e->line),
                      parse_rule(e->value.substr(arrow + 2), e->line)};
    if ((clause.region.kind == RegionKind::OnCircle ||
         clause.region.kind == RegionKind::NotOnCircle) &&
        !has_circle)
      throw ParseError("region '" + clause.region.describe() +
                           "' needs a [circle] section",
                       e->line, 1);
    if (clause.region.point && clause.region.point->dim() != s.point_dim())
      throw ParseError("region point dimension mismatch", e->line, 1);
    if (clause.rule.constant && clause.rule.constant->dim() != s.point_dim())
      throw ParseError("rule point dimension mismatch", e->line, 1);
    clauses.push_back(std::move(clause));
  }
  return clauses;
}

CheckSpec build_check(const RawDoc& doc, const space::Instance& s) {
  const auto* entries = doc.find("check");
  if (!entries) throw ParseError("missing [check] section", 1, 1);
  reject_unknown(*entries,
                 {"theorem", "kind", "A", "sample_size", "seed", "grid_step",
                  "tol", "scan", "max_iter", "start", "start2", "alpha_point",
                  "phi_center"},
                 "check");
  CheckSpec check;
  const Entry* theorem = find_key(*entries, "theorem");
  if (!theorem) throw ParseError("[check] needs a theorem", 1, 1);
  check.theorem = trim(theorem->value);
  static const std::vector<std::string> allowed = {
      "5", "6", "7", "8", "9", "10", "11", "prop1", "contraction", "picard"};
  if (std::find(allowed.begin(), allowed.end(), check.theorem) ==
      allowed.end())
    throw ParseError("unknown theorem '" + check.theorem + "'", theorem->line,
                     1);

  if (const Entry* e = find_key(*entries, "kind")) {
    check.kind = trim(e->value);
    static const std::vector<std::string> kinds = {"banach", "kannan", "ciric",
                                                   "caristi"};
    if (std::find(kinds.begin(), kinds.end(), check.kind) == kinds.end())
      throw ParseError("unknown kind '" + check.kind + "'", e->line, 1);
  }
  if (const Entry* e = find_key(*entries, "A"))
    check.a = parse_element(e->value, s.algebra_desc, e->line);
  if (const Entry* e = find_key(*entries, "sample_size")) {
    const double v = eval_in_line(e->value, e->line);
    if (v < 1 || v != std::floor(v))
      throw ParseError("sample_size must be a positive integer", e->line, 1);
    check.sample_size = static_cast<int>(v);
  }
  if (const Entry* e = find_key(*entries, "seed")) {
    const double v = eval_in_line(e->value, e->line);
    if (v < 0 || v != std::floor(v))
      throw ParseError("seed must be a nonnegative integer", e->line, 1);
    check.seed = static_cast<std::uint64_t>(v);
  }
  if (const Entry* e = find_key(*entries, "grid_step")) {
    check.grid_step = eval_in_line(e->value, e->line);
    if (check.grid_step <= 0.0 || check.grid_step >= 1.0)
      throw ParseError("grid_step must lie in (0,1)", e->line, 1);
  }
  if (const Entry* e = find_key(*entries, "tol")) {
    check.tolerance = eval_in_line(e->value, e->line);
    if (check.tolerance <= 0.0)
      throw ParseError("tol must be positive", e->line, 1);
  }
  if (const Entry* e = find_key(*entries, "scan"))
    check.scan = parse_bool(e->value, e->line);
  if (const Entry* e = find_key(*entries, "max_iter")) {
    const double v = eval_in_line(e->value, e->line);
    if (v < 1 || v != std::floor(v))
      throw ParseError("max_iter must be a positive integer", e->line, 1);
    check.max_iter = static_cast<int>(v);
  }
  if (const Entry* e = find_key(*entries, "start"))
    check.start = parse_point(e->value, e->line);
  if (const Entry* e = find_key(*entries, "start2"))
    check.start2 = parse_point(e->value, e->line);
  if (const Entry* e = find_key(*entries, "alpha_point"))
    check.alpha_point = parse_point(e->value, e->line);
  if (const Entry* e = find_key(*entries, "phi_center"))
    check.phi_center = parse_point(e->value, e->line);
  return check;
}

void validate(const Scenario& sc) {
  const auto need_circle = [&](const char* what) {
    if (!sc.circle1)
      throw ParseError(std::string(what) + " needs a [circle] section", 1, 1);
  };
  const auto need_mapping = [&](const char* what) {
    if (sc.mapping.empty())
      throw ParseError(std::string(what) + " needs a [mapping] section", 1, 1);
    bool has_default = false;
    for (const auto& clause : sc.mapping)
      if (clause.region.kind == RegionKind::Default) has_default = true;
    if (!has_default)
      throw ParseError("the mapping needs a 'default' clause so it is total",
                       1, 1);
  };
  const auto need_a = [&](const char* what) {
    if (!sc.check.a)
      throw ParseError(std::string(what) + " needs A in [check]", 1, 1);
  };

  const std::string& th = sc.check.theorem;
  if (th == "5" || th == "6") {
    need_circle("theorem 5/6");
    need_mapping("theorem 5/6");
  } else if (th == "7") {
    need_circle("theorem 7");
    need_mapping("theorem 7");
    if (!sc.check.scan) need_a("theorem 7");
  } else if (th == "8") {
    need_mapping("theorem 8");
    need_a("theorem 8");
  } else if (th == "9" || th == "10" || th == "11") {
    need_circle("theorems 9-11");
    need_mapping("theorems 9-11");
    need_a("theorems 9-11");
  } else if (th == "prop1") {
    need_circle("prop1");
    if (!sc.circle2)
      throw ParseError("prop1 needs a [circle2] section", 1, 1);
    if (!sc.check.alpha_point)
      throw ParseError("prop1 needs alpha_point in [check]", 1, 1);
    if (!sc.mapping.empty())
      throw ParseError("prop1 builds its own mapping; remove [mapping]", 1, 1);
  } else if (th == "contraction") {
    need_mapping("contraction");
    if (sc.check.kind.empty())
      throw ParseError("contraction needs kind in [check]", 1, 1);
    if (sc.check.kind == "caristi") {
      if (!sc.check.phi_center && !sc.circle1)
        throw ParseError(
            "caristi needs phi_center (or a [circle] to center phi on)", 1, 1);
    } else {
      need_a("contraction");
    }
  } else if (th == "picard") {
    need_mapping("picard");
    if (!sc.check.start)
      throw ParseError("picard needs start in [check]", 1, 1);
  }

  for (const auto& p : {sc.check.start, sc.check.start2, sc.check.alpha_point,
                        sc.check.phi_center})
    if (p && p->dim() != sc.instance.point_dim())
      throw ParseError("point " + p->describe() + " has dimension " +
                           std::to_string(p->dim()) + ", expected " +
                           std::to_string(sc.instance.point_dim()),
                       1, 1);
}

}  // namespace

std::string RegionSpec::describe() const {
  switch (kind) {
    case RegionKind::OnCircle: return "on_circle";
    case RegionKind::NotOnCircle: return "not_on_circle";
    case RegionKind::Eq: return "eq " + point->describe();
    case RegionKind::Default: return "default";
  }
  return "unknown";
}

std::string RuleSpec::describe() const {
  switch (kind) {
    case space::RuleKind::Identity: return "identity";
    case space::RuleKind::ReciprocalOrZero: return "reciprocal-or-zero";
    case space::RuleKind::Constant: return "constant " + constant->describe();
    case space::RuleKind::Affine:
      return "affine " + numeric::num_to_string(a) + ", " +
             numeric::num_to_string(b);
    case space::RuleKind::Table: return "table";
  }
  return "unknown";
}

double eval_expression(const std::string& text, int line_for_errors) {
  return eval_in_line(text, line_for_errors);
}

Scenario parse_scenario(const std::string& text) {
  const RawDoc doc = tokenize(text);

  const auto* meta = doc.find("scenario");
  if (!meta) throw ParseError("missing [scenario] section", 1, 1);
  reject_unknown(*meta, {"id"}, "scenario");
  const Entry* id = find_key(*meta, "id");
  if (!id) throw ParseError("[scenario] needs an id", 1, 1);

  Scenario sc{.id = trim(id->value),
              .instance = build_instance(doc),
              .circle1 = std::nullopt,
              .circle2 = std::nullopt,
              .mapping = {},
              .check = {}};
  check_algebra_section(doc, sc.instance);
  if (const auto* entries = doc.find("circle"))
    sc.circle1 = build_circle(*entries, sc.instance, "circle");
  if (const auto* entries = doc.find("circle2")) {
    if (!sc.circle1)
      throw ParseError("[circle2] without a [circle] section", 1, 1);
    sc.circle2 = build_circle(*entries, sc.instance, "circle2");
  }
  sc.mapping = build_mapping(doc, sc.instance, sc.circle1.has_value());
  sc.check = build_check(doc, sc.instance);
  validate(sc);
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string emit_scenario(const Scenario& sc) {
  using numeric::num_to_string;
  std::string out;
  out += "[scenario]\nid = " + sc.id + "\n\n";

  const auto& s = sc.instance;
  out += "[algebra]\nkind = " + algebra::kind_name(s.algebra_desc.kind) +
         "\ndim = " + std::to_string(s.algebra_desc.dim) + "\n\n";

  out += "[space]\nkind = " + space_kind_name(s.kind) + "\n";
  if (s.kind == space::SpaceKind::RealLineDiag ||
      s.kind == space::SpaceKind::RealLineExpDiag)
    out += "alpha = " + num_to_string(s.alpha) + "\n";
  if (s.kind == space::SpaceKind::StepFn)
    out += "pieces = " + std::to_string(s.pieces) + "\n";
  if (s.kind == space::SpaceKind::SquareTuple)
    out += std::string("ambient = ") + (s.ambient ? "true" : "false") + "\n";
  out += "\n";

  const auto emit_circle = [&](const char* name, const CircleSpec& c) {
    out += std::string("[") + name + "]\ncenter = " + c.center.describe() +
           "\nradius = " + c.radius.describe() + "\n\n";
  };
  if (sc.circle1) emit_circle("circle", *sc.circle1);
  if (sc.circle2) emit_circle("circle2", *sc.circle2);

  if (!sc.mapping.empty()) {
    out += "[mapping]\n";
    for (std::size_t i = 0; i < sc.mapping.size(); ++i)
      out += "rule." + std::to_string(i + 1) + " = " +
             sc.mapping[i].region.describe() + " -> " +
             sc.mapping[i].rule.describe() + "\n";
    out += "\n";
  }

  out += "[check]\ntheorem = " + sc.check.theorem + "\n";
  if (!sc.check.kind.empty()) out += "kind = " + sc.check.kind + "\n";
  if (sc.check.a) out += "A = " + sc.check.a->describe() + "\n";
  out += "sample_size = " + std::to_string(sc.check.sample_size) + "\n";
  out += "seed = " + std::to_string(sc.check.seed) + "\n";
  if (sc.check.grid_step != 0.01)
    out += "grid_step = " + num_to_string(sc.check.grid_step) + "\n";
  if (sc.check.tolerance != 1e-9)
    out += "tol = " + num_to_string(sc.check.tolerance) + "\n";
  if (sc.check.scan) out += "scan = true\n";
  if (sc.check.max_iter != 100)
    out += "max_iter = " + std::to_string(sc.check.max_iter) + "\n";
  if (sc.check.start) out += "start = " + sc.check.start->describe() + "\n";
  if (sc.check.start2) out += "start2 = " + sc.check.start2->describe() + "\n";
  if (sc.check.alpha_point)
    out += "alpha_point = " + sc.check.alpha_point->describe() + "\n";
  if (sc.check.phi_center)
    out += "phi_center = " + sc.check.phi_center->describe() + "\n";
  return out;
}

}  // namespace ccvms::scenario
