#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xmk/ddf.hpp"
#include "xmk/highest_weight.hpp"
#include "xmk/serialize.hpp"
#include "xmk/virtual_vxr.hpp"
#include "xmk/xk.hpp"

namespace py = pybind11;
using namespace xmk;

namespace {

int rank_or_auto(const std::vector<int>& nu, int rank) {
  if (rank <= 0) return auto_rank(nu);
  require_rank(nu, rank);
  return rank;
}

TensorWord word_arg(const std::string& word, Diamond d, const std::vector<int>& widths) {
  return widths.empty() ? parse_word(word, d) : parse_word(word, d, &widths);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Crystal energy, VXR and DDF computations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "x_polynomial",
      [](const std::string& diamond, const std::vector<int>& nu, const std::string& lam, int rank) {
        Diamond d = parse_diamond(diamond);
        return x_polynomial(d, nu, Partition::parse(lam), rank_or_auto(nu, rank)).to_string();
      },
      py::arg("diamond"), py::arg("nu"), py::arg("lam"), py::arg("rank") = 0);

  m.def(
      "k_polynomial",
      [](const std::string& diamond, const std::vector<int>& nu, const std::string& lam) {
        return k_polynomial(parse_diamond(diamond), nu, Partition::parse(lam)).to_string();
      },
      py::arg("diamond"), py::arg("nu"), py::arg("lam"));

  m.def(
      "verify_json",
      [](const std::string& diamond, const std::vector<int>& nu, int rank) {
        return to_json(verify_xk(parse_diamond(diamond), nu, rank_or_auto(nu, rank))).dump();
      },
      py::arg("diamond"), py::arg("nu"), py::arg("rank") = 0);

  m.def(
      "vxr_json",
      [](const std::string& word, const std::string& diamond, int rank, const std::vector<int>& widths) {
        Diamond d = parse_diamond(diamond);
        TensorWord b = word_arg(word, d, widths);
        int n = rank > 0 ? rank : auto_rank(b.widths());
        return to_json(vxr(b, d, n), d).dump();
      },
      py::arg("word"), py::arg("diamond"), py::arg("rank") = 0, py::arg("widths") = std::vector<int>{});

  m.def(
      "ddf_json",
      [](const std::string& word, const std::string& diamond) {
        Diamond d = parse_diamond(diamond);
        return to_json(ddf_map(parse_word(word, d), d), d).dump();
      },
      py::arg("word"), py::arg("diamond"));

  m.def(
      "ddf_trace",
      [](const std::string& word, const std::string& diamond) {
        Diamond d = parse_diamond(diamond);
        return render_ddf_trace(ddf_trace(parse_word(word, d), d));
      },
      py::arg("word"), py::arg("diamond"));

  m.def(
      "diamond_coenergy",
      [](const std::string& word, const std::string& diamond, int rank, const std::vector<int>& widths) {
        Diamond d = parse_diamond(diamond);
        TensorWord b = word_arg(word, d, widths);
        int n = rank > 0 ? rank : auto_rank(b.widths());
        return diamond_coenergy(b, d, n).to_string();
      },
      py::arg("word"), py::arg("diamond"), py::arg("rank") = 0, py::arg("widths") = std::vector<int>{});

  m.def(
      "lr_coefficient",
      [](const std::string& tau, const std::string& lam, const std::string& mu) {
        return lr_coefficient(Partition::parse(tau), Partition::parse(lam), Partition::parse(mu));
      },
      py::arg("tau"), py::arg("lam"), py::arg("mu"));
}
