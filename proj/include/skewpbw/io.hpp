#pragma once

// Definition files (JSON) and polynomial expressions. The grammar of both is
// documented in docs/definition-format.md.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewpbw/harness.hpp"

namespace skewpbw {

using json = nlohmann::ordered_json;

struct NamedMap {
  std::string id;
  MapPtr map;
};

/// Parsed definition file. The extension, if present, is not yet verified.
struct Definition {
  std::string name;
  RingPtr ring;
  std::optional<Grading> grading;
  std::vector<NamedMap> maps;
  std::shared_ptr<Extension> extension;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(std::string const& text, std::size_t pos) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void schema_error(std::string const& where, std::string const& what) {
  throw error(errc::parse_error, where + ": " + what);
}

inline json const& field(json const& j, char const* key, std::string const& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline int as_int(json const& j, std::string const& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<int>();
}

inline std::vector<int> int_list(json const& j, std::string const& where) {
  if (!j.is_array()) schema_error(where, "expected an integer list");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_int(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline std::vector<std::vector<int>> int_matrix(json const& j, std::string const& where) {
  if (!j.is_array()) schema_error(where, "expected a list of rows");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(int_list(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline elem_t element(FiniteRing const& R, json const& j, std::string const& where) {
  std::vector<int> c = int_list(j, where);
  if (c.size() != R.rank())
    schema_error(where, "element needs " + std::to_string(R.rank()) + " coordinates");
  return R.encode(c);
}

inline std::size_t var_index(json const& j, std::size_t n, std::string const& where) {
  int const v = as_int(j, where);
  if (v < 1 || static_cast<std::size_t>(v) > n)
    schema_error(where, "variable index must lie in 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

}  // namespace detail

inline Definition definition_from_json(json const& doc) {
  using namespace detail;
  Definition def;
  if (!doc.is_object()) schema_error("/", "expected an object");
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) def.name = *it;

  json const& r = field(doc, "ring", "/");
  std::vector<int> const orders = int_list(field(r, "orders", "/ring"), "/ring/orders");
  std::size_t const m = orders.size();
  json const& cj = field(r, "constants", "/ring");
  if (!cj.is_array() || cj.size() != m) schema_error("/ring/constants", "need m rows");
  FiniteRing::constants_t constants;
  for (std::size_t i = 0; i < m; ++i) {
    std::string const w = "/ring/constants/" + std::to_string(i);
    constants.push_back(int_matrix(cj[i], w));
  }
  std::vector<int> const one = int_list(field(r, "one", "/ring"), "/ring/one");
  def.ring = make_ring(orders, constants, one, def.name);
  FiniteRing const& R = *def.ring;
  if (auto it = r.find("degrees"); it != r.end()) {
    std::vector<unsigned> labels;
    for (int v : int_list(*it, "/ring/degrees")) {
      if (v < 0) schema_error("/ring/degrees", "degrees must be >= 0");
      labels.push_back(static_cast<unsigned>(v));
    }
    def.grading = Grading(def.ring, labels);
  }

  auto find_map = [&](std::string const& id, std::string const& where) -> MapPtr {
    for (auto const& nm : def.maps)
      if (nm.id == id) return nm.map;
    schema_error(where, "unknown map \"" + id + "\"");
  };
  if (auto it = doc.find("maps"); it != doc.end()) {
    if (!it->is_array()) schema_error("/maps", "expected a list");
    for (std::size_t k = 0; k < it->size(); ++k) {
      json const& mj = (*it)[k];
      std::string const w = "/maps/" + std::to_string(k);
      json const& idj = field(mj, "id", w);
      json const& kindj = field(mj, "kind", w);
      if (!idj.is_string() || !kindj.is_string()) schema_error(w, "id and kind are strings");
      std::string const id = idj;
      std::string const kind = kindj;
      auto const matrix = int_matrix(field(mj, "matrix", w), w + "/matrix");
      MapPtr map;
      if (kind == "endomorphism") {
        map = make_endomorphism(def.ring, matrix);
      } else if (kind == "derivation") {
        json const& pj = field(mj, "partner", w);
        if (!pj.is_string()) schema_error(w + "/partner", "expected a map id");
        map = make_sigma_derivation(def.ring, find_map(pj, w + "/partner"), matrix);
      } else {
        schema_error(w + "/kind", "expected \"endomorphism\" or \"derivation\"");
      }
      for (auto const& nm : def.maps)
        if (nm.id == id) schema_error(w + "/id", "duplicate map id \"" + id + "\"");
      def.maps.push_back({id, map});
    }
  }

  if (auto it = doc.find("extension"); it != doc.end()) {
    json const& e = *it;
    std::string const w = "/extension";
    int const nv = as_int(field(e, "variables", w), w + "/variables");
    if (nv < 1) schema_error(w + "/variables", "need at least one variable");
    auto const n = static_cast<std::size_t>(nv);
    auto map_list = [&](char const* key) {
      std::vector<MapPtr> out;
      json const& lj = field(e, key, w);
      if (!lj.is_array() || lj.size() != n)
        schema_error(w + "/" + key, "need one map id per variable");
      for (std::size_t i = 0; i < n; ++i) {
        std::string const wi = w + "/" + key + "/" + std::to_string(i);
        if (!lj[i].is_string()) schema_error(wi, "expected a map id");
        out.push_back(find_map(lj[i], wi));
      }
      return out;
    };
    std::vector<MapPtr> sigmas, deltas;
    if (e.contains("sigmas") || e.contains("deltas")) {
      sigmas = map_list("sigmas");
      deltas = map_list("deltas");
    } else {
      auto id = identity_map(def.ring);
      sigmas.assign(n, id);
      deltas.assign(n, zero_derivation(def.ring, id));
    }
    std::size_t word_cap = default_delta_word_cap;
    if (auto wc = e.find("delta_word_cap"); wc != e.end())
      word_cap = static_cast<std::size_t>(as_int(*wc, w + "/delta_word_cap"));
    SigmaSystem sys(def.ring, sigmas, deltas, word_cap);
    auto pair_of = [&](json const& entry, std::string const& we) {
      std::size_t const i = var_index(field(entry, "i", we), n, we + "/i");
      std::size_t const j = var_index(field(entry, "j", we), n, we + "/j");
      if (i >= j) schema_error(we, "need i < j");
      return VarPair{i, j};
    };
    DTable d;
    if (auto dj = e.find("d"); dj != e.end()) {
      if (!dj->is_array()) schema_error(w + "/d", "expected a list");
      for (std::size_t k = 0; k < dj->size(); ++k) {
        std::string const we = w + "/d/" + std::to_string(k);
        d[pair_of((*dj)[k], we)] = element(R, field((*dj)[k], "value", we), we + "/value");
      }
    }
    TailTable tails;
    if (auto tj = e.find("tails"); tj != e.end()) {
      if (!tj->is_array()) schema_error(w + "/tails", "expected a list");
      for (std::size_t k = 0; k < tj->size(); ++k) {
        json const& t = (*tj)[k];
        std::string const we = w + "/tails/" + std::to_string(k);
        Tail tail;
        if (auto c = t.find("constant"); c != t.end())
          tail.constant = element(R, *c, we + "/constant");
        tail.linear.assign(n, R.zero());
        if (auto l = t.find("linear"); l != t.end()) {
          if (!l->is_array() || l->size() != n)
            schema_error(we + "/linear", "need one coefficient per variable");
          for (std::size_t v = 0; v < n; ++v)
            tail.linear[v] = element(R, (*l)[v], we + "/linear/" + std::to_string(v));
        }
        tails[pair_of(t, we)] = tail;
      }
    }
    def.extension = make_extension(def.ring, std::move(sys), d, tails, def.name);
  }
  return def;
}

inline Definition parse_definition(std::string const& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto at = msg.find(": ", msg.find("parse error")); at != std::string::npos)
      msg = msg.substr(at + 2);
    throw error(errc::parse_error,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
  return definition_from_json(doc);
}

inline Definition load_definition(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_definition(ss.str());
}

// ---------------------------------------------------------------------------
// Export

inline json coords_json(FiniteRing const& R, elem_t x) { return json(R.decode(x)); }

/// JSON definition of a ring with optional grading and extension. Maps are
/// named sigma<i>/delta<i>; repeated maps are shared.
inline json definition_to_json(std::string const& name, RingPtr const& ring,
                               std::optional<Grading> const& grading,
                               ExtensionPtr const& ext) {
  FiniteRing const& R = *ring;
  json doc;
  doc["name"] = name;
  json r;
  r["orders"] = std::vector<int>(R.orders().begin(), R.orders().end());
  r["constants"] = R.structure_constants();
  r["one"] = R.decode(R.one());
  if (grading) r["degrees"] = grading->labels();
  doc["ring"] = r;
  if (!ext) return doc;

  json maps = json::array();
  std::vector<std::pair<MapPtr, std::string>> seen;
  auto name_of = [&](MapPtr const& m, std::string const& fresh) {
    for (auto const& [p, id] : seen)
      if (p == m) return id;
    json mj;
    mj["id"] = fresh;
    if (m->kind() == MapKind::endomorphism) {
      mj["kind"] = "endomorphism";
    } else {
      mj["kind"] = "derivation";
      std::string partner;
      for (auto const& [p, id] : seen)
        if (p == m->partner()) partner = id;
      mj["partner"] = partner;
    }
    mj["matrix"] = m->matrix();
    maps.push_back(mj);
    seen.emplace_back(m, fresh);
    return fresh;
  };
  std::size_t const n = ext->vars();
  json e;
  e["variables"] = n;
  std::vector<std::string> sig, del;
  for (std::size_t i = 0; i < n; ++i)
    sig.push_back(name_of(ext->system().sigmas()[i], "sigma" + std::to_string(i + 1)));
  for (std::size_t i = 0; i < n; ++i) {
    MapPtr const& d = ext->system().deltas()[i];
    // the partner must be emitted first
    name_of(d->partner(), "sigma" + std::to_string(i + 1) + "p");
    del.push_back(name_of(d, "delta" + std::to_string(i + 1)));
  }
  e["sigmas"] = sig;
  e["deltas"] = del;
  if (ext->system().delta_word_cap() != default_delta_word_cap)
    e["delta_word_cap"] = ext->system().delta_word_cap();
  json dj = json::array(), tj = json::array();
  for (auto const& [key, v] : ext->d())
    if (v != R.one()) dj.push_back({{"i", key.first + 1}, {"j", key.second + 1},
                                    {"value", R.decode(v)}});
  for (auto const& [key, t] : ext->tails()) {
    if (t.is_zero()) continue;
    json lin = json::array();
    for (elem_t c : t.linear) lin.push_back(R.decode(c));
    tj.push_back({{"i", key.first + 1}, {"j", key.second + 1},
                  {"constant", R.decode(t.constant)}, {"linear", lin}});
  }
  if (!dj.empty()) e["d"] = dj;
  if (!tj.empty()) e["tails"] = tj;
  doc["maps"] = maps;
  doc["extension"] = e;
  return doc;
}

inline json export_entry(CorpusEntry const& c) {
  return definition_to_json(c.name, c.ring, c.grading, c.extension);
}

/// Same ring data, grading, map matrices per variable, d table and tails.
inline bool structurally_equal(Definition const& a, Definition const& b) {
  FiniteRing const& R = *a.ring;
  FiniteRing const& S = *b.ring;
  if (!std::equal(R.orders().begin(), R.orders().end(), S.orders().begin(), S.orders().end()))
    return false;
  if (R.structure_constants() != S.structure_constants() || R.decode(R.one()) != S.decode(S.one()))
    return false;
  if (a.grading.has_value() != b.grading.has_value()) return false;
  if (a.grading && a.grading->labels() != b.grading->labels()) return false;
  if (!a.extension || !b.extension) return !a.extension && !b.extension;
  Extension const& A = *a.extension;
  Extension const& B = *b.extension;
  if (A.vars() != B.vars()) return false;
  for (std::size_t i = 0; i < A.vars(); ++i) {
    if (A.system().sigma(i).matrix() != B.system().sigma(i).matrix()) return false;
    if (A.system().delta(i).matrix() != B.system().delta(i).matrix()) return false;
  }
  for (auto const& [key, v] : A.d())
    if (R.decode(v) != S.decode(B.d(key.first, key.second))) return false;
  for (auto const& [key, t] : A.tails()) {
    Tail const& u = B.tail(key.first, key.second);
    if (R.decode(t.constant) != S.decode(u.constant)) return false;
    for (std::size_t k = 0; k < A.vars(); ++k)
      if (R.decode(t.linear[k]) != S.decode(u.linear[k])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial expressions
//
//   expr   := sign? term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '[' int (',' int)* ']' | var ('^' int)? | int | '(' expr ')'
//   var    := 'x' | 'x' digits
//
// Products are evaluated in A, so right coefficients come out normalized.

class ExpressionParser {
 public:
  ExpressionParser(ExtensionPtr ext, std::string text)
      : ext_(std::move(ext)), text_(std::move(text)) {}

  SkewPolynomial parse() {
    SkewPolynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const {
    throw error(errc::parse_error, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t const start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    long const v = std::stol(text_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  SkewPolynomial expr() {
    bool negate = false;
    skip();
    if (eat('-')) negate = true;
    else eat('+');
    SkewPolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  SkewPolynomial term() {
    SkewPolynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  SkewPolynomial factor() {
    FiniteRing const& R = ext_->ring();
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char const c = text_[pos_];
    if (c == '[') {
      ++pos_;
      coords_t coords;
      do coords.push_back(static_cast<int>(integer()));
      while (eat(','));
      if (!eat(']')) fail("expected ']'");
      if (coords.size() != R.rank())
        fail("coefficient needs " + std::to_string(R.rank()) + " coordinates");
      return SkewPolynomial::constant(ext_, R.encode(coords));
    }
    if (c == '(') {
      ++pos_;
      SkewPolynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t const start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t index = 0;
      if (pos_ == start) {
        if (ext_->vars() != 1) fail("write x1..x" + std::to_string(ext_->vars()));
      } else {
        index = std::stoul(text_.substr(start, pos_ - start));
        if (index < 1 || index > ext_->vars()) fail("no variable x" + std::to_string(index));
        --index;
      }
      long e = 1;
      if (eat('^')) {
        e = integer();
        if (e < 0) fail("negative exponent");
      }
      return power(SkewPolynomial::variable(ext_, index), static_cast<std::uint64_t>(e));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long const v = integer();
      return SkewPolynomial::constant(ext_, R.scale(v, R.one()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ExtensionPtr ext_;
  std::string text_;
  std::size_t pos_ = 0;
};

inline SkewPolynomial parse_polynomial(ExtensionPtr const& ext, std::string const& text) {
  if (!ext->verified()) throw error(errc::unverified, "parse over an unverified presentation");
  return ExpressionParser(ext, text).parse();
}

// ---------------------------------------------------------------------------
// Reports

inline json budget_json(SearchBudget const& b) {
  return {{"degree", b.degree_cap},
          {"support", b.support_cap},
          {"exponent", b.exponent_cap},
          {"pairs", b.pair_budget}};
}

inline json clause_json(Clause const& c) {
  json j = {{"name", c.name}, {"value", to_string(c.value)}, {"evidence", to_string(c.evidence)}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

inline json ni_witness_json(NIWitness const& w) {
  return {{"kind", to_string(w.kind)},
          {"f", to_string(w.f)},
          {"g", to_string(w.g)},
          {"result", to_string(w.result)},
          {"result_probe", to_string(w.result_probe)}};
}

/// Timings are kept out of the record so reports diff cleanly.
inline json report_json(TheoremReport const& r) {
  json j = {{"id", to_string(r.id)}, {"instance", r.instance}, {"verdict", to_string(r.verdict)}};
  json pre = json::array(), con = json::array();
  for (auto const& c : r.preconditions) pre.push_back(clause_json(c));
  for (auto const& c : r.conclusions) con.push_back(clause_json(c));
  j["preconditions"] = pre;
  j["conclusions"] = con;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["budget"] = budget_json(r.budget);
  if (r.ni) {
    json ni = {{"verdict", to_string(r.ni->verdict)},
               {"enumerated", r.ni->enumerated},
               {"proved_nilpotent", r.ni->proved_nilpotent},
               {"pairs_checked", r.ni->pairs_checked}};
    json ws = json::array();
    for (auto const& w : r.ni->witnesses) ws.push_back(ni_witness_json(w));
    ni["witnesses"] = ws;
    j["ni_check"] = ni;
  }
  return j;
}

}  // namespace skewpbw
