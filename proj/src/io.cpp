#include "rank2sg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace rank2sg {

// ---------------------------------------------------------------- TOML subset

namespace {

struct TomlValue {
  enum Kind { Int, Str, Arr } kind = Int;
  std::int64_t i = 0;
  std::string s;
  std::vector<TomlValue> a;
};

class TomlParser {
 public:
  explicit TomlParser(const std::string& text) : src_(text) {}

  std::map<std::string, TomlValue> parse() {
    std::map<std::string, TomlValue> out;
    for (;;) {
      skip_ws(true);
      if (pos_ >= src_.size()) break;
      std::string key = parse_key();
      skip_ws(false);
      expect('=');
      skip_ws(false);
      TomlValue v = parse_value();
      if (out.count(key)) fail("duplicate key " + key);
      out[key] = v;
      skip_ws(false);
      if (pos_ < src_.size() && src_[pos_] != '\n') fail("trailing characters after value");
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(src_.begin(), src_.begin() + static_cast<std::ptrdiff_t>(pos_), '\n'));
    throw DomainError("parse", "theta file line " + std::to_string(line) + ": " + msg);
  }

  void skip_ws(bool newlines) {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string parse_key() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                                  src_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a key");
    return src_.substr(start, pos_ - start);
  }

  TomlValue parse_value() {
    if (pos_ >= src_.size()) fail("missing value");
    TomlValue v;
    char c = src_[pos_];
    if (c == '[') {
      ++pos_;
      v.kind = TomlValue::Arr;
      for (;;) {
        skip_ws(true);
        if (pos_ < src_.size() && src_[pos_] == ']') {
          ++pos_;
          break;
        }
        v.a.push_back(parse_value());
        skip_ws(true);
        if (pos_ < src_.size() && src_[pos_] == ',') {
          ++pos_;
          continue;
        }
        skip_ws(true);
        expect(']');
        break;
      }
    } else if (c == '"') {
      ++pos_;
      v.kind = TomlValue::Str;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\n') fail("unterminated string");
        v.s += src_[pos_++];
      }
      expect('"');
    } else {
      std::size_t start = pos_;
      if (c == '-' || c == '+') ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_ || !std::isdigit(static_cast<unsigned char>(src_[pos_ - 1]))) fail("expected a value");
      v.i = std::stoll(src_.substr(start, pos_ - start));
    }
    return v;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

std::int64_t as_int(const std::map<std::string, TomlValue>& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->second.kind != TomlValue::Int) throw DomainError("parse", "missing integer " + key);
  return it->second.i;
}

}  // namespace

Theta parse_theta_toml(const std::string& text) {
  auto doc = TomlParser(text).parse();
  auto m = as_int(doc, "m"), n = as_int(doc, "n");
  if (m < 1 || n < 1 || m > 64 || n > 64) throw DomainError("out-of-range", "m and n must lie in 1..64");
  auto it = doc.find("relations");
  if (it == doc.end() || it->second.kind != TomlValue::Arr) throw DomainError("parse", "missing relations array");
  std::vector<std::array<int, 4>> raw;
  for (const auto& row : it->second.a) {
    if (row.kind != TomlValue::Arr || row.a.size() != 4) throw DomainError("parse", "relation must be [i, j, i2, j2]");
    std::array<int, 4> r{};
    for (int a = 0; a < 4; ++a) {
      if (row.a[a].kind != TomlValue::Int) throw DomainError("parse", "relation entries must be integers");
      r[a] = static_cast<int>(row.a[a].i);
    }
    raw.push_back(r);
  }
  return validate_theta(raw, static_cast<int>(m), static_cast<int>(n));
}

Theta load_theta(const std::string& path) { return parse_theta_toml(read_text_file(path)); }

std::string theta_to_toml(const Theta& theta, const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "m = " << theta.m() << "\n";
  os << "n = " << theta.n() << "\n";
  os << "# e_i f_j = f_j2 e_i2 as [i, j, i2, j2]\n";
  os << "relations = [\n";
  for (const auto& r : theta.relations())
    os << "  [" << r[0] << ", " << r[1] << ", " << r[2] << ", " << r[3] << "],\n";
  os << "]\n";
  return os.str();
}

// ---------------------------------------------------------------- JSON

Json theta_to_json(const Theta& theta) {
  Json j;
  j["m"] = theta.m();
  j["n"] = theta.n();
  j["relations"] = Json::array();
  for (const auto& r : theta.relations()) j["relations"].push_back({r[0], r[1], r[2], r[3]});
  return j;
}

Theta theta_from_json(const Json& j) {
  try {
    std::vector<std::array<int, 4>> raw;
    for (const auto& r : j.at("relations")) raw.push_back({r.at(0), r.at(1), r.at(2), r.at(3)});
    return validate_theta(raw, j.at("m").get<int>(), j.at("n").get<int>());
  } catch (const Json::exception& ex) {
    throw DomainError("parse", std::string("theta json: ") + ex.what());
  }
}

namespace {

Json vec_json(const Vec2& v) { return Json::array({v.s, v.t}); }
Vec2 vec_from(const Json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

Json lattice_json(const Sublattice& l) {
  Json out = Json::array();
  for (const auto& b : l.basis()) out.push_back(vec_json(b));
  return out;
}

Sublattice lattice_from(const Json& j) {
  std::vector<Vec2> gens;
  for (const auto& v : j) gens.push_back(vec_from(v));
  return Sublattice::from(gens);
}

Json bound_json(std::int64_t v) { return v == kNoThreshold ? Json(nullptr) : Json(v); }
std::int64_t bound_from(const Json& j) { return j.is_null() ? kNoThreshold : j.get<std::int64_t>(); }

}  // namespace

Json rep_to_json(const Rep& rep, bool inline_theta) {
  Json j;
  j["schema"] = "rank2sg-rep/1";
  if (inline_theta) j["theta"] = theta_to_json(rep.theta);
  j["kernel"] = lattice_json(rep.kernel);
  Json dom;
  if (rep.kind == DomainKind::Periodic) {
    dom["kind"] = "periodic";
    dom["period"] = lattice_json(rep.period);
  } else {
    dom["kind"] = "window";
    dom["rect"] = {rep.rect.s_lo, rep.rect.s_hi, rep.rect.t_lo, rep.rect.t_hi};
    dom["threshold"] = {bound_json(rep.threshold.s), bound_json(rep.threshold.t)};
  }
  j["domain"] = dom;
  j["cells"] = Json::array();
  for (std::size_t a = 0; a < rep.size(); ++a) {
    Json c;
    c["at"] = vec_json(rep.point(a));
    c["i"] = rep.imap[a];
    c["j"] = rep.jmap[a];
    c["alpha"] = rep.alpha[a].str();
    c["beta"] = rep.beta[a].str();
    j["cells"].push_back(c);
  }
  j["meta"] = Json::object();
  for (const auto& [k, v] : rep.meta) j["meta"][k] = v;
  return j;
}

Rep rep_from_json(const Json& j, const Theta* theta) {
  try {
    if (j.contains("schema") && j["schema"] != "rank2sg-rep/1") throw DomainError("parse", "unknown rep schema");
    Theta th;
    if (theta) th = *theta;
    else if (j.contains("theta")) th = theta_from_json(j["theta"]);
    else throw DomainError("parse", "rep has no inline theta and none was given");
    Sublattice kernel = lattice_from(j.at("kernel"));
    const Json& dom = j.at("domain");
    Rep rep;
    std::string kind = dom.at("kind");
    if (kind == "periodic") {
      rep = make_periodic(th, kernel, lattice_from(dom.at("period")));
    } else if (kind == "window") {
      const Json& r = dom.at("rect");
      Rect rect{r.at(0), r.at(1), r.at(2), r.at(3)};
      Vec2 thr{kNoThreshold, kNoThreshold};
      if (dom.contains("threshold")) thr = {bound_from(dom["threshold"].at(0)), bound_from(dom["threshold"].at(1))};
      rep = make_window(th, kernel, rect, thr);
    } else {
      throw DomainError("parse", "domain kind must be periodic or window");
    }
    std::vector<bool> set(rep.size(), false);
    for (const auto& c : j.at("cells")) {
      auto sl = rep.slot(vec_from(c.at("at")));
      if (!sl) throw DomainError("parse", "cell outside the domain");
      if (set[*sl]) throw DomainError("parse", "cell given twice");
      set[*sl] = true;
      rep.imap[*sl] = c.at("i");
      rep.jmap[*sl] = c.at("j");
      if (c.contains("alpha")) rep.alpha[*sl] = RationalAngle::parse(c["alpha"].get<std::string>());
      if (c.contains("beta")) rep.beta[*sl] = RationalAngle::parse(c["beta"].get<std::string>());
    }
    if (rep.kind == DomainKind::Periodic && std::find(set.begin(), set.end(), false) != set.end())
      throw DomainError("parse", "periodic rep is missing cells");
    if (j.contains("meta"))
      for (const auto& [k, v] : j["meta"].items()) rep.meta[k] = v.get<std::string>();
    require_valid(rep);
    return rep;
  } catch (const Json::exception& ex) {
    throw DomainError("parse", std::string("rep json: ") + ex.what());
  }
}

Json tail_to_json(const TailSpec& t) {
  auto fmt = [](const Word& w) {
    bool pure = !w.empty() && std::all_of(w.begin(), w.end(), [&](const Letter& x) { return x.color == w[0].color; });
    return pure ? format_indices(w) : format_word(w);
  };
  return Json{{"preperiod", fmt(t.preperiod)}, {"period", fmt(t.period)}};
}

TailSpec tail_from_json(const Json& j, Color pure_color) {
  auto parse = [&](const std::string& s) {
    if (s.find('e') != std::string::npos || s.find('f') != std::string::npos) return parse_word(s);
    return pure_color == Color::Blue ? parse_blue(s) : parse_red(s);
  };
  try {
    TailSpec t{parse(j.value("preperiod", std::string())), parse(j.at("period").get<std::string>())};
    t.check();
    return t;
  } catch (const Json::exception& ex) {
    throw DomainError("parse", std::string("tail json: ") + ex.what());
  }
}

Json graph_to_json(const RepGraph& g) {
  Json j;
  j["schema"] = "rank2sg-repgraph/1";
  j["m"] = g.m;
  j["n"] = g.n;
  j["vertices"] = Json::array();
  for (int v = 0; v < g.size(); ++v)
    j["vertices"].push_back({{"name", g.names[v]}, {"original", static_cast<bool>(g.original[v])},
                             {"frontier", static_cast<bool>(g.frontier[v])}});
  j["edges"] = Json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"src", e.src},
                          {"dst", e.dst},
                          {"color", e.color == Color::Blue ? "blue" : "red"},
                          {"label", e.label},
                          {"phase", e.phase.str()}});
  return j;
}

RepGraph graph_from_json(const Json& j) {
  try {
    if (j.value("schema", std::string()) != "rank2sg-repgraph/1") throw DomainError("parse", "unknown graph schema");
    RepGraph g;
    g.m = j.at("m");
    g.n = j.at("n");
    for (const auto& v : j.at("vertices")) {
      int id = g.add_vertex(v.at("name"), v.value("original", true));
      g.frontier[id] = v.value("frontier", false);
    }
    for (const auto& e : j.at("edges")) {
      int s = e.at("src"), d = e.at("dst");
      if (s < 0 || d < 0 || s >= g.size() || d >= g.size()) throw DomainError("parse", "edge endpoint out of range");
      std::string c = e.at("color");
      if (c != "blue" && c != "red") throw DomainError("parse", "edge color must be blue or red");
      g.add_edge(s, d, c == "blue" ? Color::Blue : Color::Red, e.at("label"),
                 RationalAngle::parse(e.value("phase", std::string("0"))));
    }
    return g;
  } catch (const Json::exception& ex) {
    throw DomainError("parse", std::string("graph json: ") + ex.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("io", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("io", "cannot write " + path);
  out << text;
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& ex) {
    throw DomainError("parse", path + ": " + ex.what());
  }
}

// ---------------------------------------------------------------- fixtures

std::vector<Fixture> builtin_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"forward3",
                 Theta::from_relations(2, 2, {{1, 1, 1, 2}, {1, 2, 2, 1}, {2, 1, 1, 1}, {2, 2, 2, 2}}),
                 "3-cycle (1,1) -> (1,2) -> (2,1), (2,2) fixed"});
  out.push_back({"reverse3",
                 Theta::from_relations(2, 2, {{1, 1, 2, 1}, {2, 1, 1, 2}, {1, 2, 1, 1}, {2, 2, 2, 2}}),
                 "3-cycle (1,1) -> (2,1) -> (1,2), (2,2) fixed"});
  out.push_back({"flip", Theta::from_relations(2, 2, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 1, 2}, {2, 2, 2, 2}}),
                 "flip: theta(i,j) = (j,i)"});
  out.push_back({"identity22", Theta::identity(2, 2), "identity on 2x2"});
  {
    std::vector<std::array<int, 4>> raw;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) raw.push_back({i, j, i, j});
    auto set = [&](int i, int j, int i2, int j2) { raw[(i - 1) * 3 + (j - 1)] = {i, j, i2, j2}; };
    auto swap = raw;
    set(1, 2, 2, 1);
    set(2, 1, 1, 2);
    out.push_back({"swap33", Theta::from_relations(3, 3, raw), "3x3: (1,2) <-> (2,1), all else fixed"});
    raw = swap;
    set(1, 1, 1, 3);
    set(1, 3, 1, 1);
    set(1, 2, 2, 1);
    set(2, 1, 1, 2);
    out.push_back({"twocycles33", Theta::from_relations(3, 3, raw), "3x3: ((1,1),(1,3)) ((1,2),(2,1))"});
  }
  return out;
}

Theta builtin_theta(const std::string& name) {
  for (const auto& f : builtin_fixtures())
    if (f.name == name) return f.theta;
  throw DomainError("unknown-fixture", "no fixture named " + name);
}

Rep fixed_point_rep() { return from_theta_cycle(builtin_theta("reverse3"), {{2, 2}}); }

}  // namespace rank2sg
