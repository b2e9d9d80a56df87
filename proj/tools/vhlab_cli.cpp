// vhlab: command-line laboratory for walk counting, Heisenberg paths,
// Diophantine orbit counts, multiplicative arithmetic, subword complexity,
// and P-recursive sequence tooling.
//
// Global flags: --format tsv|json, --out FILE, --cache-dir DIR, --threads N,
// --seed S, --memory-budget BYTES.  Exit codes: 0 ok, 2 usage, 3 capacity.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vhlab/arith.hpp"
#include "vhlab/dioph.hpp"
#include "vhlab/heis.hpp"
#include "vhlab/path.hpp"
#include "vhlab/series.hpp"
#include "vhlab/subword.hpp"
#include "vhlab/theorem.hpp"
#include "vhlab/walk.hpp"

namespace {

using nlohmann::json;
using namespace vhlab;

struct GlobalConfig {
  std::string format = "tsv";
  std::string out;
  std::string cache_dir;
  int threads = 0;
  std::uint64_t seed = 12345;
  std::size_t memory_budget = std::size_t(4) << 30;
};

walk::EngineOptions engine_options(const GlobalConfig& cfg) {
  walk::EngineOptions o;
  o.threads = cfg.threads;
  o.memory_budget = cfg.memory_budget;
  return o;
}

void emit(const GlobalConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open --out file: " + cfg.out);
  f << text;
}

// cache: human-readable TSV artifacts keyed by engine+params+ring; a hit is
// replayed verbatim so cached and cold outputs are byte-identical
std::string cache_key_path(const GlobalConfig& cfg, const std::string& key) {
  return (std::filesystem::path(cfg.cache_dir) / (key + ".tsv")).string();
}

bool cache_load(const GlobalConfig& cfg, const std::string& key, std::string& text) {
  if (cfg.cache_dir.empty() || cfg.format != "tsv") return false;
  std::ifstream f(cache_key_path(cfg, key), std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  text = ss.str();
  return true;
}

void cache_store(const GlobalConfig& cfg, const std::string& key,
                 const std::string& text) {
  if (cfg.cache_dir.empty() || cfg.format != "tsv") return;
  std::filesystem::create_directories(cfg.cache_dir);
  std::ofstream f(cache_key_path(cfg, key), std::ios::binary);
  f << text;
}

std::string fmt_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

std::string fmt_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string table_cell(const walk::CountTable& t, std::size_t l) {
  if (t.ring.kind == walk::RingSpec::Kind::Real) return fmt_double(t.reals[l]);
  return t.counts[l].get_str();
}

std::vector<mpz_class> read_sequence(const std::string& src) {
  std::istringstream own;
  std::ifstream file;
  std::istream* in = nullptr;
  if (src == "-") {
    in = &std::cin;
  } else {
    file.open(src);
    if (!file) throw std::runtime_error("cannot open sequence file: " + src);
    in = &file;
  }
  std::vector<mpz_class> seq;
  std::string tok;
  while (*in >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(*in, rest);
      continue;
    }
    seq.emplace_back(tok);
  }
  return seq;
}

series::Recurrence read_recurrence(const std::string& src) {
  std::ifstream f(src);
  if (!f) throw std::runtime_error("cannot open recurrence file: " + src);
  std::ostringstream ss;
  ss << f.rdbuf();
  return series::Recurrence::from_json(ss.str());
}

// ------------------------------------------------------------- subcommands --

int run_gamma(const GlobalConfig& cfg, int max_len, const std::string& ring_s,
              const std::string& group_s, bool no_prune, bool force_sparse) {
  walk::RingSpec ring = walk::RingSpec::parse(ring_s);
  walk::GeneratorSet gens = group_s == "h3" ? walk::GeneratorSet::h3_lazy()
                                            : walk::GeneratorSet::vh_default();
  std::string key = "gamma-" + group_s + "-maxlen" + std::to_string(max_len) +
                    "-" + ring_s + (no_prune ? "-noprune" : "");
  std::string text;
  if (!cache_load(cfg, key, text)) {
    walk::EngineOptions opts = engine_options(cfg);
    opts.prune = !no_prune;
    opts.force_sparse = force_sparse;
    walk::CountTable t = walk::count_closed(gens, max_len, ring, opts);
    if (cfg.format == "json") {
      json j;
      j["engine"] = "gamma";
      j["group"] = group_s;
      j["ring"] = ring.to_string();
      j["max_len"] = max_len;
      json arr = json::array();
      for (std::size_t l = 0; l <= t.max_len(); ++l) arr.push_back(table_cell(t, l));
      j["c"] = arr;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    std::ostringstream ss;
    ss << "# engine=gamma group=" << group_s << " max_len=" << max_len
       << " ring=" << ring.to_string() << "\n";
    if (ring.kind == walk::RingSpec::Kind::Mod2K)
      ss << "# ring=mod2^" << ring.k << "\n";
    ss << "ell\tc\n";
    for (std::size_t l = 0; l <= t.max_len(); ++l)
      ss << l << "\t" << table_cell(t, l) << "\n";
    text = ss.str();
    cache_store(cfg, key, text);
  }
  emit(cfg, text);
  return 0;
}

int run_reduced_split(const GlobalConfig& cfg, int max_len,
                      const std::string& ring_s, bool no_prune,
                      bool force_sparse) {
  walk::RingSpec ring = walk::RingSpec::parse(ring_s);
  std::string key = "reduced-split-maxlen" + std::to_string(max_len) + "-" +
                    ring_s + (no_prune ? "-noprune" : "");
  std::string text;
  if (!cache_load(cfg, key, text)) {
    walk::EngineOptions opts = engine_options(cfg);
    opts.prune = !no_prune;
    opts.force_sparse = force_sparse;
    walk::ReducedTables t = walk::count_reduced_split(max_len, ring, opts);
    if (cfg.format == "json") {
      json j;
      j["engine"] = "reduced-split";
      j["ring"] = ring.to_string();
      j["max_len"] = max_len;
      for (auto [name, tab] : {std::pair{"r", &t.r}, {"r1", &t.r1},
                               {"r2", &t.r2}, {"r3", &t.r3}}) {
        json arr = json::array();
        for (std::size_t l = 0; l <= tab->max_len(); ++l)
          arr.push_back(tab->counts[l].get_str());
        j[name] = arr;
      }
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    std::ostringstream ss;
    ss << "# engine=reduced-split max_len=" << max_len
       << " ring=" << ring.to_string() << "\n";
    if (ring.kind == walk::RingSpec::Kind::Mod2K)
      ss << "# ring=mod2^" << ring.k << "\n";
    ss << "ell\tr\tr1\tr2\tr3\n";
    for (std::size_t l = 0; l <= t.r.max_len(); ++l)
      ss << l << "\t" << t.r.counts[l] << "\t" << t.r1.counts[l] << "\t"
         << t.r2.counts[l] << "\t" << t.r3.counts[l] << "\n";
    text = ss.str();
    cache_store(cfg, key, text);
  }
  emit(cfg, text);
  return 0;
}

int run_h3_diaconis(const GlobalConfig& cfg, int ell) {
  std::string key = "h3-diaconis-ell" + std::to_string(ell);
  std::string text;
  if (!cache_load(cfg, key, text)) {
    walk::CountTable t = walk::h3_lazy_prob_table(ell, engine_options(cfg));
    if (cfg.format == "json") {
      json j;
      j["engine"] = "h3-diaconis";
      j["ell"] = ell;
      json probs = json::array(), ratios = json::array();
      for (int l = 0; l <= ell; ++l) {
        probs.push_back(t.reals[l]);
        ratios.push_back(static_cast<double>(l) * l * t.reals[l]);
      }
      j["prob"] = probs;
      j["ratio"] = ratios;
      j["limit"] = 25.0 / 16.0;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    std::ostringstream ss;
    ss << "# engine=h3-diaconis ell=" << ell << " ring=real limit=1.5625\n";
    ss << "ell\tprob\tratio\n";
    for (int l = 0; l <= ell; ++l)
      ss << l << "\t" << fmt_double(t.reals[l]) << "\t"
         << fmt_double(static_cast<double>(l) * l * t.reals[l]) << "\n";
    text = ss.str();
    cache_store(cfg, key, text);
  }
  emit(cfg, text);
  return 0;
}

int run_path(const GlobalConfig& cfg, const std::string& verb,
             const std::string& word_s) {
  heis::Word w = heis::parse_word(word_s);
  path::LatticePath p = path::word_to_path(w);
  if (verb == "area") {
    heis::VHElement g = heis::eval_word(w);
    std::int64_t area = path::algebraic_area(p);
    bool trivial = g.eps == 0 && g.h.a == 0 && g.h.b == 0 && g.h.c == 0;
    if (cfg.format == "json") {
      json j;
      j["word"] = heis::word_to_string(w);
      j["endpoint"] = {g.h.a, g.h.b, g.h.c};
      j["mode"] = g.eps;
      j["area"] = area;
      j["trivial"] = trivial;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    std::ostringstream ss;
    ss << "# word=" << heis::word_to_string(w) << "\n";
    ss << "a\t" << g.h.a << "\nb\t" << g.h.b << "\nc\t" << g.h.c << "\nmode\t"
       << g.eps << "\narea\t" << area << "\ntrivial\t" << (trivial ? 1 : 0)
       << "\n";
    emit(cfg, ss.str());
    return 0;
  }
  // grid
  path::WindingGrid grid = path::winding_grid(p);
  if (cfg.format == "json") {
    json j;
    j["xmin"] = grid.xmin;
    j["ymin"] = grid.ymin;
    j["rows"] = grid.rows;
    j["sum"] = grid.sum();
    emit(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream ss;
  ss << "# winding grid, top row = highest y; xmin=" << grid.xmin
     << " ymin=" << grid.ymin << " sum=" << grid.sum() << "\n";
  for (auto it = grid.rows.rbegin(); it != grid.rows.rend(); ++it) {
    for (std::size_t i = 0; i < it->size(); ++i)
      ss << (i ? "\t" : "") << (*it)[i];
    ss << "\n";
  }
  emit(cfg, ss.str());
  return 0;
}

const char* kind_name(dioph::OrbitKind k) {
  switch (k) {
    case dioph::OrbitKind::Fixed: return "fixed";
    case dioph::OrbitKind::ABAB: return "abab";
    case dioph::OrbitKind::ABCC: return "abcc";
    case dioph::OrbitKind::Free: return "free";
  }
  return "?";
}

int run_dioph(const GlobalConfig& cfg, const std::string& verb, std::int64_t n,
              std::int64_t ell, const std::string& reading_s,
              const std::string& method_s) {
  std::ostringstream ss;
  if (verb == "list") {
    auto sols = dioph::enumerate_Sn(n);
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& q : sols) arr.push_back({q.a, q.b, q.c, q.d});
      json j;
      j["n"] = n;
      j["count"] = sols.size();
      j["solutions"] = arr;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    ss << "# S_n n=" << n << " count=" << sols.size() << "\n";
    ss << "a\tb\tc\td\n";
    for (const auto& q : sols)
      ss << q.a << "\t" << q.b << "\t" << q.c << "\t" << q.d << "\n";
  } else if (verb == "orbits") {
    auto st = dioph::orbit_decompose(n);
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& o : st.orbits)
        arr.push_back({{"rep", {o.rep.a, o.rep.b, o.rep.c, o.rep.d}},
                       {"kind", kind_name(o.kind)},
                       {"size", o.size}});
      json j;
      j["n"] = n;
      j["orbits"] = arr;
      j["fixed"] = st.fixed;
      j["abab"] = st.abab;
      j["abcc"] = st.abcc;
      j["free"] = st.free_orbits;
      j["total_elements"] = st.total_elements;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    ss << "# orbits n=" << n << " fixed=" << st.fixed << " abab=" << st.abab
       << " abcc=" << st.abcc << " free=" << st.free_orbits
       << " total=" << st.total_elements << "\n";
    ss << "a\tb\tc\td\tkind\tsize\n";
    for (const auto& o : st.orbits)
      ss << o.rep.a << "\t" << o.rep.b << "\t" << o.rep.c << "\t" << o.rep.d
         << "\t" << kind_name(o.kind) << "\t" << o.size << "\n";
  } else if (verb == "abcc") {
    dioph::AbccMethod m = dioph::AbccMethod::ClosedForm;
    if (method_s == "brute") m = dioph::AbccMethod::Brute;
    else if (method_s == "totient") m = dioph::AbccMethod::Totient;
    else if (method_s != "closed")
      throw CLI::ValidationError("--method must be brute|totient|closed");
    std::int64_t v = dioph::count_abcc(n, m);
    if (cfg.format == "json") {
      json j;
      j["n"] = n;
      j["method"] = method_s;
      j["abcc"] = v;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    ss << v << "\n";
  } else {  // r2
    dioph::Reading reading = reading_s == "representative"
                                 ? dioph::Reading::Representative
                                 : dioph::Reading::Expanded;
    if (reading_s != "expanded" && reading_s != "representative")
      throw CLI::ValidationError("--reading must be expanded|representative");
    mpz_class v = dioph::r2_formula(ell, reading);
    if (cfg.format == "json") {
      json j;
      j["ell"] = ell;
      j["word_length"] = 2 * ell + 6;
      j["reading"] = reading_s;
      j["r2"] = v.get_str();
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    ss << "# r2 prediction for word length " << (2 * ell + 6) << " reading="
       << reading_s << "\n";
    ss << v.get_str() << "\n";
  }
  emit(cfg, ss.str());
  return 0;
}

int run_arith(const GlobalConfig& cfg, const std::string& verb,
              const std::string& n_s, std::uint64_t limit) {
  std::ostringstream ss;
  if (verb == "m") {
    mpz_class n(n_s);
    ss << arith::max_square_divisor(n).get_str() << "\n";
  } else if (verb == "f") {
    mpz_class n(n_s);
    ss << arith::f_sign(n) << "\n";
  } else if (verb == "density") {
    arith::DensityResult d = arith::density_scan(limit);
    if (cfg.format == "json") {
      json j;
      j["limit"] = limit;
      j["matched"] = d.matched;
      j["total"] = d.total;
      j["density"] = d.density;
      j["constant"] = arith::density_constant();
      j["segments"] = d.segments;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    ss << "# density of {n <= limit : m(n) = 1 mod 4}\n";
    ss << "limit\t" << limit << "\nmatched\t" << d.matched << "\ntotal\t"
       << d.total << "\ndensity\t" << fmt_fixed6(d.density) << "\nconstant\t"
       << fmt_fixed6(arith::density_constant()) << "\n";
  } else if (verb == "gauss") {
    auto bad = arith::gauss_identity_counterexample(limit);
    ss << (bad ? std::to_string(*bad) : std::string("none")) << "\n";
  } else {  // qf
    arith::QfResult qf = arith::qf_scan(limit);
    if (cfg.format == "json") {
      json j;
      j["limit"] = limit;
      j["members"] = qf.members;
      j["reciprocal_sum"] = qf.reciprocal_sum.get_str();
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    ss << "# prime powers q <= limit with f(q) = -1; reciprocal sum "
       << qf.reciprocal_sum.get_str() << "\n";
    for (auto q : qf.members) ss << q << "\n";
  }
  emit(cfg, ss.str());
  return 0;
}

std::vector<std::int8_t> pick_sequence(const std::string& name,
                                       std::uint64_t window) {
  if (name == "f") return subword::f_sequence(window);
  if (name == "catalan") return subword::catalan_mod2_sequence(window);
  if (name == "odd") return subword::odd_residue_sequence(window);
  throw CLI::ValidationError("--seq must be f|catalan|odd");
}

int run_complexity(const GlobalConfig& cfg, const std::string& verb, int n,
                   std::uint64_t window, const std::string& seq_name,
                   const std::string& block_s, bool force_crt,
                   std::uint64_t scan_limit, long max_k, std::uint64_t seed) {
  if (verb == "profile") {
    auto seq = pick_sequence(seq_name, window);
    auto p = subword::complexity_profile(seq, n);
    if (cfg.format == "json") {
      json j;
      j["seq"] = seq_name;
      j["window"] = window;
      j["p"] = p;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    std::ostringstream ss;
    ss << "# subword complexity seq=" << seq_name << " window=" << window << "\n";
    ss << "n\tp\n";
    for (std::size_t i = 0; i < p.size(); ++i) ss << i << "\t" << p[i] << "\n";
    emit(cfg, ss.str());
    return 0;
  }
  if (verb == "scan") {
    auto s = subword::saturation_scan(n, window);
    if (cfg.format == "json") {
      json j;
      j["n"] = s.n;
      j["window"] = window;
      j["scanned"] = s.scanned;
      j["present"] = s.present;
      j["missing_count"] = s.missing.size();
      json miss = json::array();
      for (std::size_t i = 0; i < s.missing.size() && i < 64; ++i)
        miss.push_back(s.missing[i]);
      j["missing"] = miss;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    std::ostringstream ss;
    ss << "# saturation scan of f, n=" << n << " window=" << window << "\n";
    ss << "n\tscanned\tpresent\ttotal\tmissing\n";
    ss << s.n << "\t" << s.scanned << "\t" << s.present << "\t"
       << (std::uint64_t(1) << n) << "\t" << s.missing.size() << "\n";
    for (std::size_t i = 0; i < s.missing.size() && i < 64; ++i) {
      ss << "# missing";
      for (std::int8_t v : subword::decode_block(s.missing[i], n))
        ss << (v > 0 ? " +1" : " -1");
      ss << "\n";
    }
    emit(cfg, ss.str());
    return 0;
  }
  // witness
  std::vector<std::int8_t> block;
  if (!block_s.empty()) {
    for (char ch : block_s) {
      if (ch == '+') block.push_back(1);
      else if (ch == '-') block.push_back(-1);
      else throw CLI::ValidationError("--block must be a string of + and -");
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i)
      block.push_back((rng() & 1) ? 1 : -1);
  }
  subword::WitnessOptions wopt;
  wopt.force_crt = force_crt;
  wopt.scan_limit = scan_limit;
  wopt.max_k = max_k;
  subword::WitnessCertificate cert = subword::crt_witness(block, wopt);
  if (!subword::verify_certificate(cert))
    throw std::logic_error("internal: certificate failed verification");
  emit(cfg, subword::certificate_to_json(cert) + "\n");
  return 0;
}

int run_series(const GlobalConfig& cfg, const std::string& verb,
               const std::string& input, const std::string& rec_file,
               int max_order, int max_degree, bool even_shifts, bool odd_variant,
               const std::string& r_file, const std::string& gamma_file,
               int order) {
  if (verb == "guess") {
    auto seq = read_sequence(input);
    auto rec = series::guess_recurrence(seq, max_order, max_degree, even_shifts);
    emit(cfg, rec ? rec->to_json() + "\n" : std::string("null\n"));
    return 0;
  }
  if (verb == "check") {
    auto seq = read_sequence(input);
    series::Recurrence rec = read_recurrence(rec_file);
    auto bad = series::check_recurrence(rec, seq);
    if (cfg.format == "json") {
      json j;
      j["holds"] = !bad.has_value();
      if (bad) j["first_bad_n"] = *bad;
      emit(cfg, j.dump(2) + "\n");
      return 0;
    }
    emit(cfg, bad ? "fails\t" + std::to_string(*bad) + "\n" : std::string("holds\n"));
    return 0;
  }
  if (verb == "extract-even") {
    series::Recurrence rec = read_recurrence(rec_file);
    emit(cfg, series::extract_even(rec, odd_variant).to_json() + "\n");
    return 0;
  }
  // cogrowth-check
  auto r_seq = read_sequence(r_file);
  auto g_seq = read_sequence(gamma_file);
  series::CogrowthReport rep = series::cogrowth_check(r_seq, g_seq, order);
  if (cfg.format == "json") {
    json j;
    j["pass"] = rep.pass;
    j["order"] = order;
    if (!rep.pass) {
      j["first_mismatch"] = rep.first_mismatch;
      j["lhs"] = rep.lhs.get_str();
      j["rhs"] = rep.rhs.get_str();
    }
    emit(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream ss;
  ss << "# cogrowth identity check to order " << order << "\n";
  ss << "pass\t" << (rep.pass ? 1 : 0) << "\n";
  if (!rep.pass)
    ss << "first_mismatch\t" << rep.first_mismatch << "\nlhs\t"
       << rep.lhs.get_str() << "\nrhs\t" << rep.rhs.get_str() << "\n";
  emit(cfg, ss.str());
  return 0;
}

int run_theorem(const GlobalConfig& cfg, int jmax, const std::string& ring_s) {
  walk::RingSpec ring = walk::RingSpec::parse(ring_s);
  auto rows = theorem::miracle_report(jmax, ring, engine_options(cfg));
  emit(cfg, theorem::report_to_json(rows) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vhlab: a computational laboratory for a virtually-Heisenberg walk"};
  app.require_subcommand(1);
  GlobalConfig cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "write output to FILE instead of stdout");
  app.add_option("--cache-dir", cfg.cache_dir,
                 "cache DP tables (TSV artifacts) in DIR");
  app.add_option("--threads", cfg.threads,
                 "worker count (0 = VHLAB_THREADS env or 1)");
  app.add_option("--seed", cfg.seed, "seed for randomized inputs")
      ->capture_default_str();
  app.add_option("--memory-budget", cfg.memory_budget,
                 "dense-table budget in bytes")
      ->capture_default_str();

  // gamma
  auto* gamma = app.add_subcommand("gamma", "closed-walk counts c_l");
  int g_maxlen = 10;
  std::string g_ring = "exact", g_group = "vh";
  bool g_noprune = false, g_sparse = false;
  gamma->add_option("--max-len", g_maxlen, "maximum length")->required();
  gamma->add_option("--ring", g_ring, "exact | modK | real")->capture_default_str();
  gamma->add_option("--group", g_group, "vh | h3")
      ->check(CLI::IsMember({"vh", "h3"}))
      ->capture_default_str();
  gamma->add_flag("--no-prune", g_noprune, "disable cannot-return pruning");
  gamma->add_flag("--force-sparse", g_sparse, "force the sparse engine");

  // reduced-split
  auto* rsplit = app.add_subcommand("reduced-split", "reduced counts r, r1, r2, r3");
  int rs_maxlen = 10;
  std::string rs_ring = "exact";
  bool rs_noprune = false, rs_sparse = false;
  rsplit->add_option("--max-len", rs_maxlen, "maximum length")->required();
  rsplit->add_option("--ring", rs_ring, "exact | modK")->capture_default_str();
  rsplit->add_flag("--no-prune", rs_noprune, "disable cannot-return pruning");
  rsplit->add_flag("--force-sparse", rs_sparse, "force the sparse engine");

  // h3-diaconis
  auto* h3d = app.add_subcommand("h3-diaconis", "lazy Heisenberg return probabilities");
  int h3_ell = 40;
  h3d->add_option("--ell", h3_ell, "maximum length")->capture_default_str();

  // path
  auto* pathcmd = app.add_subcommand("path", "lattice path of a word");
  std::string p_verb, p_word;
  pathcmd->add_option("verb", p_verb, "area | grid")
      ->required()
      ->check(CLI::IsMember({"area", "grid"}));
  pathcmd->add_option("word", p_word, "word like 'x^2 y^4 x^-2 t'")->required();

  // dioph
  auto* dcmd = app.add_subcommand("dioph", "staircase Diophantine system S_n");
  std::string d_verb, d_reading = "expanded", d_method = "closed";
  std::int64_t d_n = 0, d_ell = 0;
  dcmd->add_option("verb", d_verb, "list | orbits | abcc | r2")
      ->required()
      ->check(CLI::IsMember({"list", "orbits", "abcc", "r2"}));
  dcmd->add_option("--n", d_n, "index n of S_n");
  dcmd->add_option("--ell", d_ell, "Diophantine index for r2 (word length 2l+6)");
  dcmd->add_option("--reading", d_reading, "expanded | representative")
      ->capture_default_str();
  dcmd->add_option("--method", d_method, "brute | totient | closed")
      ->capture_default_str();

  // arith
  auto* acmd = app.add_subcommand("arith", "square-part arithmetic");
  std::string a_verb, a_n = "1";
  std::uint64_t a_limit = 1000000;
  acmd->add_option("verb", a_verb, "m | f | density | gauss | qf")
      ->required()
      ->check(CLI::IsMember({"m", "f", "density", "gauss", "qf"}));
  acmd->add_option("n", a_n, "argument for m|f");
  acmd->add_option("--limit", a_limit, "scan limit")->capture_default_str();

  // complexity
  auto* ccmd = app.add_subcommand("complexity", "subword complexity and witnesses");
  std::string c_verb, c_seq = "f", c_block;
  int c_n = 8;
  std::uint64_t c_window = 1 << 20, c_scan_limit = 1 << 20;
  long c_max_k = 256;
  bool c_force_crt = false;
  ccmd->add_option("verb", c_verb, "profile | scan | witness")
      ->required()
      ->check(CLI::IsMember({"profile", "scan", "witness"}));
  ccmd->add_option("--n", c_n, "block length")->capture_default_str();
  ccmd->add_option("--window", c_window, "scan window X")->capture_default_str();
  ccmd->add_option("--seq", c_seq, "f | catalan | odd")->capture_default_str();
  ccmd->add_option("--block", c_block, "explicit block like '+--+'");
  ccmd->add_flag("--force-crt", c_force_crt, "skip the scan shortcut");
  ccmd->add_option("--scan-limit", c_scan_limit, "witness scan range")
      ->capture_default_str();
  ccmd->add_option("--max-k", c_max_k, "CRT candidate budget")->capture_default_str();

  // series
  auto* scmd = app.add_subcommand("series", "P-recursive sequence tools");
  std::string s_verb, s_input = "-", s_rec, s_r, s_gamma;
  int s_max_order = 3, s_max_degree = 3, s_order = 12;
  bool s_even = false, s_odd_variant = false;
  scmd->add_option("verb", s_verb, "guess | check | extract-even | cogrowth-check")
      ->required()
      ->check(CLI::IsMember({"guess", "check", "extract-even", "cogrowth-check"}));
  scmd->add_option("--input", s_input, "sequence file ('-' = stdin)")
      ->capture_default_str();
  scmd->add_option("--recurrence", s_rec, "recurrence JSON file");
  scmd->add_option("--max-order", s_max_order, "ansatz order bound")
      ->capture_default_str();
  scmd->add_option("--max-degree", s_max_degree, "ansatz degree bound")
      ->capture_default_str();
  scmd->add_flag("--even-shifts", s_even, "restrict ansatz to even shifts");
  scmd->add_flag("--odd", s_odd_variant, "extract the odd-index subsequence");
  scmd->add_option("--r", s_r, "reduced-count sequence file");
  scmd->add_option("--gamma", s_gamma, "closed-walk sequence file");
  scmd->add_option("--order", s_order, "comparison order")->capture_default_str();

  // theorem
  auto* tcmd = app.add_subcommand("theorem", "headline congruence rows");
  std::string t_verb = "verify", t_ring = "mod24";
  int t_jmax = 5;
  tcmd->add_option("verb", t_verb, "verify")->check(CLI::IsMember({"verify"}));
  tcmd->add_option("--jmax", t_jmax, "largest j (length 4j+8)")
      ->capture_default_str();
  tcmd->add_option("--ring", t_ring, "mod24 | exact")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : 2;
  }

  try {
    if (gamma->parsed())
      return run_gamma(cfg, g_maxlen, g_ring, g_group, g_noprune, g_sparse);
    if (rsplit->parsed())
      return run_reduced_split(cfg, rs_maxlen, rs_ring, rs_noprune, rs_sparse);
    if (h3d->parsed()) return run_h3_diaconis(cfg, h3_ell);
    if (pathcmd->parsed()) return run_path(cfg, p_verb, p_word);
    if (dcmd->parsed())
      return run_dioph(cfg, d_verb, d_n, d_ell, d_reading, d_method);
    if (acmd->parsed()) return run_arith(cfg, a_verb, a_n, a_limit);
    if (ccmd->parsed())
      return run_complexity(cfg, c_verb, c_n, c_window, c_seq, c_block,
                            c_force_crt, c_scan_limit, c_max_k, cfg.seed);
    if (scmd->parsed())
      return run_series(cfg, s_verb, s_input, s_rec, s_max_order, s_max_degree,
                        s_even, s_odd_variant, s_r, s_gamma, s_order);
    if (tcmd->parsed()) return run_theorem(cfg, t_jmax, t_ring);
  } catch (const vhlab::walk::CapacityError& e) {
    std::cerr << "capacity-error\t" << e.what() << "\n";
    return 3;
  } catch (const vhlab::subword::BudgetExceeded& e) {
    std::cerr << "budget-exceeded\t" << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage-error\t" << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage-error\t" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error\t" << e.what() << "\n";
    return 1;
  }
  return 2;
}
