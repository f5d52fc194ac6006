#include "xmk/serialize.hpp"

namespace xmk {

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const Tableau& t) {
  Json cells = Json::array();
  for (int r = 0; r < t.num_rows(); ++r)
    for (int c = t.inner()[r]; c < t.row_length(r); ++c) cells.push_back({r, c, t.at(r, c)});
  return Json{{"inner", to_json(t.inner())}, {"outer", to_json(t.outer())}, {"cells", cells}};
}

Tableau tableau_from_json(const Json& j) {
  Partition inner = partition_from_json(j.at("inner"));
  Partition outer = partition_from_json(j.at("outer"));
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < outer.length(); ++r) rows.emplace_back(static_cast<std::size_t>(outer[r] - inner[r]), 0);
  for (const auto& cell : j.at("cells")) {
    int r = cell.at(0).get<int>(), c = cell.at(1).get<int>();
    if (r >= outer.length() || c < inner[r] || c >= outer[r]) throw ParseError("tableau cell outside the skew shape", 0);
    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner[r])] = cell.at(2).get<int>();
  }
  return Tableau(inner, rows);
}

Json to_json(const TensorWord& w, Diamond alphabet) {
  std::vector<int> widths = w.widths();
  return Json{{"alphabet", to_string(alphabet)}, {"widths", widths}, {"text", to_string(w)}};
}

TensorWord word_from_json(const Json& j) {
  Diamond d = parse_diamond(j.at("alphabet").get<std::string>());
  auto widths = j.at("widths").get<std::vector<int>>();
  return parse_word(j.at("text").get<std::string>(), d, &widths);
}

Json to_json(const HalfInteger& h) { return h.to_string(); }

HalfInteger half_integer_from_json(const Json& j) {
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return HalfInteger(std::stoi(s));
  if (s.substr(slash + 1) != "2") throw ParseError("half-integer denominator must be 2", slash);
  return HalfInteger::from_twice(std::stoi(s.substr(0, slash)));
}

Json to_json(const HalfGradedPoly& p) {
  Json out = Json::object();
  for (auto [twice, coeff] : p.terms()) out[std::to_string(twice)] = coeff;
  return out;
}

HalfGradedPoly poly_from_json(const Json& j) {
  HalfGradedPoly p;
  for (const auto& [key, coeff] : j.items()) p.add_term(HalfInteger::from_twice(std::stoi(key)), coeff.get<std::int64_t>());
  return p;
}

Json to_json(const Involution& I) {
  Json cycles = Json::array();
  for (auto [a, i] : I.cycles) cycles.push_back({a, i});
  return Json{{"cycles", cycles}, {"fixed", I.fixed}};
}

Involution involution_from_json(const Json& j) {
  Involution I;
  for (const auto& c : j.at("cycles")) I.cycles.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  I.fixed = j.at("fixed").get<std::vector<int>>();
  I.normalize();
  return I;
}

Json to_json(const Biword& w) {
  Json out = Json::array();
  for (auto [p, v] : w.pairs) out.push_back({p, v});
  return out;
}

Biword biword_from_json(const Json& j) {
  Biword w;
  for (const auto& e : j) w.pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return w;
}

Json to_json(const VxrOutput& v, Diamond d) {
  (void)d;
  Json dplus = Json::array(), dminus = Json::array();
  for (const auto& s : v.dplus) dplus.push_back({s.position, s.value});
  for (const auto& s : v.dminus) dminus.push_back({s.position, s.value});
  return Json{{"c", to_json(v.c, Diamond::Empty)},
              {"Z", to_json(v.Z)},
              {"tau", to_json(v.tau)},
              {"mu", to_json(v.mu)},
              {"dcheck", to_json(v.dcheck, Diamond::Empty)},
              {"dcheck_plus", dplus},
              {"dcheck_minus", dminus},
              {"grading_lhs", to_json(v.grading_lhs)},
              {"grading_rhs", to_json(v.grading_rhs)}};
}

Json to_json(const DdfData& d, Diamond alphabet) {
  (void)alphabet;
  return Json{{"c", to_json(d.c, Diamond::Empty)}, {"T", to_json(d.T)},         {"I", to_json(d.I)},
              {"S", to_json(d.S)},                 {"Iw0", to_json(d.Iw0)},     {"P", to_json(d.P)},
              {"Q", to_json(d.Q)},                 {"lambda", to_json(d.lambda)}, {"mu", to_json(d.mu)},
              {"tau", to_json(d.tau)}};
}

Json to_json(const XkReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"lambda", to_json(e.lambda)},
                       {"x_squared", to_json(e.x_squared)},
                       {"k", to_json(e.k)},
                       {"pass", e.pass}});
  return Json{{"diamond", to_string(r.d)}, {"nu", r.nu}, {"rank", r.rank}, {"pass", r.all_pass()}, {"entries", entries}};
}

Json to_json(const GrowthArray& a) {
  Json shapes = Json::array();
  for (const auto& col : a.G) {
    Json c = Json::array();
    for (const auto& p : col) c.push_back(to_json(p));
    shapes.push_back(c);
  }
  Json specials = Json::array();
  for (auto [x, y] : a.specials) specials.push_back({x, y});
  return Json{{"shapes", shapes}, {"specials", specials}};
}

}  // namespace xmk
