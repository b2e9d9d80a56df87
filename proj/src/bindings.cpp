// pybind11 bindings for the vhlab core: walk counting, Heisenberg paths,
// Diophantine orbits, square-part arithmetic, subword witnesses, and
// P-recursive tooling.  Big integers cross the boundary as native Python
// ints (via decimal strings, no precision loss).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "vhlab/arith.hpp"
#include "vhlab/dioph.hpp"
#include "vhlab/heis.hpp"
#include "vhlab/path.hpp"
#include "vhlab/series.hpp"
#include "vhlab/subword.hpp"
#include "vhlab/theorem.hpp"
#include "vhlab/walk.hpp"

namespace py = pybind11;
using namespace vhlab;

namespace {

py::object to_pyint(const mpz_class& z) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpz_class from_py(py::handle h) {
  return mpz_class(py::str(h).cast<std::string>());
}

std::vector<mpz_class> seq_from_py(py::iterable it) {
  std::vector<mpz_class> seq;
  for (py::handle h : it) seq.push_back(from_py(h));
  return seq;
}

py::list table_to_py(const walk::CountTable& t) {
  py::list out;
  if (t.ring.kind == walk::RingSpec::Kind::Real) {
    for (double v : t.reals) out.append(v);
  } else {
    for (const mpz_class& v : t.counts) out.append(to_pyint(v));
  }
  return out;
}

walk::EngineOptions options_for(int threads) {
  walk::EngineOptions o;
  o.threads = threads;
  return o;
}

py::dict cert_to_py(const subword::WitnessCertificate& cert) {
  py::dict d;
  py::list blk;
  for (std::int8_t v : cert.block) blk.append(static_cast<int>(v));
  d["block"] = blk;
  d["x"] = to_pyint(cert.x);
  py::dict tr;
  tr["via_scan"] = cert.trace.via_scan;
  tr["failure_positions"] = cert.trace.failure_positions;
  py::list fresh;
  for (auto [p, m] : cert.trace.fresh) fresh.append(py::make_tuple(p, m));
  tr["fresh"] = fresh;
  tr["modulus"] = to_pyint(cert.trace.modulus);
  tr["residue"] = to_pyint(cert.trace.residue);
  tr["k"] = cert.trace.k;
  d["trace"] = tr;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "vhlab core: exact walk counting and companion arithmetic";

  // --- words, group elements, paths
  m.def("eval_word", [](const std::string& w) {
    heis::VHElement g = heis::eval_word(heis::parse_word(w));
    return py::make_tuple(g.h.a, g.h.b, g.h.c, g.eps);
  }, py::arg("word"), "evaluate a word; returns (a, b, c, mode)");

  m.def("algebraic_area", [](const std::string& w) {
    return path::algebraic_area(path::word_to_path(heis::parse_word(w)));
  }, py::arg("word"));

  m.def("winding_grid", [](const std::string& w) {
    path::WindingGrid g = path::winding_grid(path::word_to_path(heis::parse_word(w)));
    py::dict d;
    d["xmin"] = g.xmin;
    d["ymin"] = g.ymin;
    d["rows"] = g.rows;
    d["sum"] = g.sum();
    return d;
  }, py::arg("word"));

  m.def("sl3_check", [](const std::string& w) {
    return heis::sl3_check(heis::parse_word(w));
  }, py::arg("word"), "normal-form route vs direct product route in SL3(Z)");

  // --- walk engines
  m.def("count_closed", [](int max_len, const std::string& ring,
                           const std::string& group, int threads) {
    walk::GeneratorSet gens = group == "h3" ? walk::GeneratorSet::h3_lazy()
                                            : walk::GeneratorSet::vh_default();
    return table_to_py(walk::count_closed(gens, max_len, walk::RingSpec::parse(ring),
                                          options_for(threads)));
  }, py::arg("max_len"), py::arg("ring") = "exact", py::arg("group") = "vh",
     py::arg("threads") = 0);

  m.def("count_reduced_split", [](int max_len, const std::string& ring, int threads) {
    walk::ReducedTables t = walk::count_reduced_split(
        max_len, walk::RingSpec::parse(ring), options_for(threads));
    py::dict d;
    d["r"] = table_to_py(t.r);
    d["r1"] = table_to_py(t.r1);
    d["r2"] = table_to_py(t.r2);
    d["r3"] = table_to_py(t.r3);
    return d;
  }, py::arg("max_len"), py::arg("ring") = "exact", py::arg("threads") = 0);

  m.def("brute_force_closed", [](int max_len, const std::string& group) {
    walk::GeneratorSet gens = group == "h3" ? walk::GeneratorSet::h3_lazy()
                                            : walk::GeneratorSet::vh_default();
    walk::BruteTables t = walk::brute_force_closed(gens, max_len);
    py::dict d;
    d["c"] = table_to_py(t.c);
    d["r"] = table_to_py(t.r);
    d["r1"] = table_to_py(t.r1);
    d["r2"] = table_to_py(t.r2);
    d["r3"] = table_to_py(t.r3);
    return d;
  }, py::arg("max_len"), py::arg("group") = "vh");

  m.def("h3_lazy_ratio", [](int ell) { return walk::h3_lazy_ratio(ell); },
        py::arg("ell"), "l^2 * c_l / 5^l for the lazy Heisenberg walk");

  // --- headline congruence rows
  m.def("miracle_report", [](int jmax, const std::string& ring, int threads) {
    auto rows = theorem::miracle_report(jmax, walk::RingSpec::parse(ring),
                                        options_for(threads));
    py::list out;
    for (const auto& r : rows) {
      py::dict d;
      d["j"] = r.j;
      d["length"] = r.length;
      d["r"] = to_pyint(r.r);
      d["r1"] = to_pyint(r.r1);
      d["r2"] = to_pyint(r.r2);
      d["r3"] = to_pyint(r.r3);
      d["divisibility_ok"] = r.divisibility_ok;
      d["s_value"] = to_pyint(r.s_value);
      d["s_parity"] = r.s_parity;
      d["m_value"] = to_pyint(r.m_value);
      d["rhs_parity"] = r.rhs_parity;
      d["congruence_match"] = r.congruence_match;
      d["r3_divisible"] = r.r3_divisible;
      d["r2_formula_expanded"] = to_pyint(r.r2_formula_expanded);
      d["r2_formula_representative"] = to_pyint(r.r2_formula_representative);
      d["r2_matches_expanded"] = r.r2_matches_expanded;
      d["r2_matches_representative"] = r.r2_matches_representative;
      out.append(d);
    }
    return out;
  }, py::arg("jmax"), py::arg("ring") = "mod24", py::arg("threads") = 0);

  // --- Diophantine layer
  m.def("enumerate_Sn", [](long n) {
    py::list out;
    for (const auto& q : dioph::enumerate_Sn(n))
      out.append(py::make_tuple(q.a, q.b, q.c, q.d));
    return out;
  }, py::arg("n"));

  m.def("count_abcc", [](long n, const std::string& method) {
    dioph::AbccMethod m2 = method == "brute"     ? dioph::AbccMethod::Brute
                           : method == "totient" ? dioph::AbccMethod::Totient
                                                 : dioph::AbccMethod::ClosedForm;
    return dioph::count_abcc(n, m2);
  }, py::arg("n"), py::arg("method") = "closed");

  m.def("r2_formula", [](long ell, const std::string& reading) {
    return to_pyint(dioph::r2_formula(
        ell, reading == "representative" ? dioph::Reading::Representative
                                         : dioph::Reading::Expanded));
  }, py::arg("ell"), py::arg("reading") = "expanded");

  // --- arithmetic
  m.def("max_square_divisor", [](py::object n) {
    return to_pyint(arith::max_square_divisor(from_py(n)));
  }, py::arg("n"));

  m.def("f_sign", [](py::object n) { return arith::f_sign(from_py(n)); },
        py::arg("n"));

  m.def("density_scan", [](std::uint64_t limit) {
    arith::DensityResult d = arith::density_scan(limit);
    return py::make_tuple(d.matched, d.total, d.density);
  }, py::arg("limit"));

  m.def("density_constant", &arith::density_constant);

  m.def("qf_members", [](std::uint64_t limit) {
    return arith::qf_scan(limit).members;
  }, py::arg("limit"));

  // --- subword complexity and witnesses
  m.def("complexity_profile", [](const std::string& seq, std::uint64_t window,
                                 int n_max) {
    std::vector<std::int8_t> s =
        seq == "catalan" ? subword::catalan_mod2_sequence(window)
        : seq == "odd"   ? subword::odd_residue_sequence(window)
                         : subword::f_sequence(window);
    return subword::complexity_profile(s, n_max);
  }, py::arg("seq") = "f", py::arg("window") = std::uint64_t(1) << 20,
     py::arg("n_max") = 8);

  m.def("saturation_scan", [](int n, std::uint64_t window) {
    subword::SaturationResult s = subword::saturation_scan(n, window);
    py::dict d;
    d["n"] = s.n;
    d["scanned"] = s.scanned;
    d["present"] = s.present;
    d["missing"] = s.missing;
    return d;
  }, py::arg("n"), py::arg("window") = std::uint64_t(1) << 20);

  m.def("crt_witness", [](const std::vector<int>& block, bool force_crt,
                          std::uint64_t scan_limit, long max_k) {
    std::vector<std::int8_t> b(block.begin(), block.end());
    subword::WitnessOptions o;
    o.force_crt = force_crt;
    o.scan_limit = scan_limit;
    o.max_k = max_k;
    return cert_to_py(subword::crt_witness(b, o));
  }, py::arg("block"), py::arg("force_crt") = false,
     py::arg("scan_limit") = std::uint64_t(1) << 20, py::arg("max_k") = 256);

  m.def("verify_witness", [](const std::vector<int>& block, py::object x) {
    subword::WitnessCertificate cert;
    cert.block.assign(block.begin(), block.end());
    cert.x = from_py(x);
    return subword::verify_certificate(cert);
  }, py::arg("block"), py::arg("x"));

  // --- series tools
  m.def("guess_recurrence", [](py::iterable seq, int max_order, int max_degree,
                               bool even_shifts_only) -> py::object {
    auto rec = series::guess_recurrence(seq_from_py(seq), max_order, max_degree,
                                        even_shifts_only);
    if (!rec) return py::none();
    return py::str(rec->to_json());
  }, py::arg("seq"), py::arg("max_order") = 3, py::arg("max_degree") = 3,
     py::arg("even_shifts_only") = false);

  m.def("check_recurrence", [](const std::string& rec_json, py::iterable seq)
            -> py::object {
    auto bad = series::check_recurrence(series::Recurrence::from_json(rec_json),
                                        seq_from_py(seq));
    if (!bad) return py::none();
    return py::int_(*bad);
  }, py::arg("recurrence_json"), py::arg("seq"),
     "None when the recurrence holds, else the first bad index");

  m.def("extract_even", [](const std::string& rec_json, bool odd_variant) {
    return series::extract_even(series::Recurrence::from_json(rec_json),
                                odd_variant)
        .to_json();
  }, py::arg("recurrence_json"), py::arg("odd_variant") = false);

  m.def("cogrowth_check", [](py::iterable r, py::iterable gamma, int order) {
    series::CogrowthReport rep =
        series::cogrowth_check(seq_from_py(r), seq_from_py(gamma), order);
    py::dict d;
    d["pass"] = rep.pass;
    d["first_mismatch"] = rep.first_mismatch;
    d["lhs"] = rep.lhs.get_str();
    d["rhs"] = rep.rhs.get_str();
    return d;
  }, py::arg("r"), py::arg("gamma"), py::arg("order"));
}
