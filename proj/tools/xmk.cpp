#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "xmk/ddf.hpp"
#include "xmk/energy.hpp"
#include "xmk/growth.hpp"
#include "xmk/highest_weight.hpp"
#include "xmk/serialize.hpp"
#include "xmk/virtual_vxr.hpp"
#include "xmk/xk.hpp"

using namespace xmk;

namespace {

struct Options {
  std::string diamond = "box";
  std::string nu;
  std::string lambda;
  std::string rank = "auto";
  std::string format = "text";
  std::string word;
  bool trace = false;
};

int explicit_rank(const Options& o) {
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(o.rank, &used);
    if (used != o.rank.size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw ParseError("rank must be an integer or 'auto'", 0);
  }
  return n;
}

int resolve_rank(const Options& o, const std::vector<int>& nu) {
  if (o.rank == "auto") return auto_rank(nu);
  int n = explicit_rank(o);
  require_rank(nu, n);
  return n;
}

/// Maps on a single word only need the rank to cover its letters.
int word_rank(const Options& o, const TensorWord& b) {
  if (o.rank == "auto") return auto_rank(b.widths());
  int n = explicit_rank(o);
  int need = max_letter_value(b);
  if (n < std::max(need, 1)) throw DomainError("rank " + std::to_string(n) + " does not cover the letters of the word");
  return n;
}

std::vector<int> need_nu(const Options& o) {
  if (o.nu.empty()) throw ParseError("--nu is required", 0);
  return parse_composition(o.nu);
}

Partition need_lambda(const Options& o) {
  if (o.lambda.empty()) throw ParseError("--lambda is required", 0);
  return Partition::parse(o.lambda);
}

TensorWord need_word(const Options& o, Diamond d) {
  if (o.word.empty()) throw ParseError("--word is required", 0);
  if (o.nu.empty()) return parse_word(o.word, d);
  std::vector<int> widths = parse_composition(o.nu);
  return parse_word(o.word, d, &widths);
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string labelled(const std::string& label, const std::string& block) {
  std::string out = label + ":";
  if (block.find('\n') == std::string::npos) return out + " " + block + "\n";
  std::istringstream in(block);
  std::string line;
  out += '\n';
  while (std::getline(in, line)) out += "  " + line + '\n';
  return out;
}

int run_x(const Options& o, bool k) {
  Diamond d = parse_diamond(o.diamond);
  auto nu = need_nu(o);
  Partition lam = need_lambda(o);
  int n = resolve_rank(o, nu);
  HalfGradedPoly p = k ? k_polynomial(d, nu, lam) : x_polynomial(d, nu, lam, n);
  Json j{{"diamond", to_string(d)}, {"nu", nu}, {"lambda", to_json(lam)}, {"rank", n}, {"polynomial", to_json(p)},
         {"text", p.to_string()}};
  emit(o, j, p.to_string() + '\n');
  return 0;
}

int run_verify(const Options& o) {
  Diamond d = parse_diamond(o.diamond);
  auto nu = need_nu(o);
  XkReport rep = verify_xk(d, nu, resolve_rank(o, nu));
  emit(o, to_json(rep), rep.render());
  return rep.all_pass() ? 0 : 1;
}

int run_vxr(const Options& o) {
  Diamond d = parse_diamond(o.diamond);
  if (d == Diamond::Empty) throw DomainError("vxr needs the box or horizontal domino family");
  TensorWord b = need_word(o, d);
  int n = word_rank(o, b);
  VxrOutput v = vxr(b, d, n);
  Json j = to_json(v, d);
  j["rank"] = n;
  std::string text = labelled("c", to_string(v.c)) + labelled("Z", v.Z.to_string()) +
                     labelled("tau", v.tau.to_string()) + labelled("mu", v.mu.to_string()) +
                     labelled("dcheck", to_string(v.dcheck)) +
                     labelled("grading", v.grading_lhs.to_string() + " = " + v.grading_rhs.to_string());
  if (o.trace) {
    text += labelled("R+", render_r_plus(v.trace));
    Json rows = Json::array();
    for (const auto& r : v.trace.rows) rows.push_back(to_string(r));
    j["trace"] = rows;
  }
  emit(o, j, text);
  return 0;
}

int run_ddf(const Options& o) {
  Diamond d = parse_diamond(o.diamond);
  TensorWord b = need_word(o, d);
  DdfData data = ddf_map(b, d);
  Json j = to_json(data, d);
  std::string text = labelled("c", to_string(data.c)) + labelled("T", data.T.to_string()) +
                     labelled("I", data.I.to_string()) + labelled("S", data.S.to_string()) +
                     labelled("P", data.P.to_string()) + labelled("Q", data.Q.to_string(true)) +
                     labelled("lambda", data.lambda.to_string()) + labelled("mu", data.mu.to_string()) +
                     labelled("tau", data.tau.to_string());
  if (o.trace) {
    auto rows = ddf_trace(b, d);
    text = render_ddf_trace(rows) + text;
    Json jr = Json::array();
    for (const auto& r : rows) jr.push_back(to_json(r, d));
    j["trace"] = jr;
  }
  emit(o, j, text);
  return 0;
}

int run_growth(const Options& o) {
  Diamond d = parse_diamond(o.diamond);
  TensorWord b = need_word(o, d);
  GrowthDdf g = growth_ddf(word_to_shape_sequence(b, d));
  Json j{{"array", to_json(g.array)}, {"T", to_json(g.T)}, {"I", to_json(g.I)}, {"P", to_json(g.P)},
         {"Q", to_json(g.Q)}};
  emit(o, j, render_growth(g.array));
  return 0;
}

int run_rmatrix(const Options& o) {
  Diamond d = parse_diamond(o.diamond);
  TensorWord b = need_word(o, d);
  if (b.size() != 2) throw ParseError("rmatrix needs a word with two factors", 0);
  Json j{{"input", to_json(b, d)}};
  std::string text;
  if (d == Diamond::Empty) {
    int N = word_rank(o, b);
    TensorWord r = apply_r(b, 1, N);
    HalfInteger h = local_coenergy_at(b, 1, N);
    j["rank"] = N;
    j["output"] = to_json(r, d);
    j["H"] = to_json(h);
    text = labelled("R", to_string(r)) + labelled("H", h.to_string());
  } else {
    int n = word_rank(o, b);
    TensorWord r = diamond_r(b, 1, d, n);
    HalfInteger e = diamond_coenergy(b, d, n);
    j["rank"] = n;
    j["output"] = to_json(r, d);
    j["D"] = to_json(e);
    text = labelled("R", to_string(r)) + labelled("D", e.to_string());
  }
  emit(o, j, text);
  return 0;
}

int run_hw(const Options& o) {
  Diamond d = parse_diamond(o.diamond);
  auto nu = need_nu(o);
  Partition lam = need_lambda(o);
  int n = resolve_rank(o, nu);
  Json list = Json::array();
  std::string text;
  for (const auto& b : enumerate_highest_weight(nu, d, lam, n)) {
    Json e{{"word", to_json(b, d)}};
    std::string line = to_string(b);
    if (d != Diamond::Empty) {
      HalfInteger c = diamond_coenergy(b, d, n);
      e["coenergy"] = to_json(c);
      line += "  D=" + c.to_string();
    }
    list.push_back(e);
    text += line + '\n';
  }
  emit(o, Json{{"diamond", to_string(d)}, {"nu", nu}, {"lambda", to_json(lam)}, {"rank", n}, {"elements", list}},
       text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal energy, VXR and DDF computations"};
  app.require_subcommand(1);
  Options o;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--diamond", o.diamond, "empty | box | hdomino")->capture_default_str();
    s->add_option("--nu", o.nu, "composition, rightmost factor first");
    s->add_option("--lambda", o.lambda, "partition, comma separated");
    s->add_option("--rank", o.rank, "integer or auto")->capture_default_str();
    s->add_option("--format", o.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    s->add_option("--word", o.word, "space separated letters, factors split by |");
    s->add_flag("--trace", o.trace, "print the step table");
    return s;
  };
  CLI::App* x = add("x", "one-dimensional sum X");
  CLI::App* k = add("k", "Kostka-Foulkes side K");
  CLI::App* verify = add("verify", "compare X(t^2) with K(t) for every lambda");
  CLI::App* vxr_cmd = add("vxr", "virtual crystal map b -> (c, Z)");
  CLI::App* ddf = add("ddf", "DDF map b -> (c, T, S)");
  CLI::App* growth = add("growth", "growth array of the DDF map");
  CLI::App* rmatrix = add("rmatrix", "combinatorial R-matrix of two factors");
  CLI::App* hw = add("hw", "highest weight elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (x->parsed()) return run_x(o, false);
    if (k->parsed()) return run_x(o, true);
    if (verify->parsed()) return run_verify(o);
    if (vxr_cmd->parsed()) return run_vxr(o);
    if (ddf->parsed()) return run_ddf(o);
    if (growth->parsed()) return run_growth(o);
    if (rmatrix->parsed()) return run_rmatrix(o);
    if (hw->parsed()) return run_hw(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
