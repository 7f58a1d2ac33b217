// cayleyctl: verification suites, Cayley graph construction, boundary and
// spectral measurement, report emission.
//
// exit codes: 0 pass, 1 verification failure, 2 config error, 3 resource cap

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayley/bfs.hpp"
#include "cayley/exec.hpp"
#include "cayley/graph.hpp"
#include "cayley/rootsys.hpp"
#include "cayley/slgen.hpp"
#include "cayley/spectral.hpp"
#include "cayley/subset.hpp"
#include "cayley/twistsys.hpp"

using nlohmann::json;
namespace roots = cayley::roots;
namespace twisted = cayley::twisted;
namespace sl = cayley::sl;
namespace spectral = cayley::spectral;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + path);
  os << text;
}

// accepts a plain prime power ("9") or a field literal ("GF(3^2)")
std::shared_ptr<const cayley::gf::Field> make_field(const std::string& spec) {
  std::uint32_t p = 0, k = 1;
  if (spec.rfind("GF(", 0) == 0 && spec.back() == ')') {
    const std::string head = spec.substr(3, spec.size() - 4);
    const auto caret = head.find('^');
    p = static_cast<std::uint32_t>(std::stoul(head.substr(0, caret)));
    if (caret != std::string::npos)
      k = static_cast<std::uint32_t>(std::stoul(head.substr(caret + 1)));
  } else {
    std::tie(p, k) = cayley::gf::split_prime_power(std::stoull(spec));
  }
  return std::make_shared<cayley::gf::Field>(p, k);
}

json equations_json(const roots::OrbitReport& rep) {
  json eqs = json::array();
  for (const auto& c : rep.checks)
    eqs.push_back({{"id", c.id}, {"lhs", c.lhs}, {"rhs", c.rhs},
                   {"pass", c.pass}});
  return eqs;
}

json untwisted_report(const roots::Series& s, bool& all_pass) {
  const auto rep = roots::verify_series_orbit(s);
  json j;
  j["series"] = rep.series;
  j["rank"] = rep.rank;
  j["equations"] = equations_json(rep);
  bool ok = rep.all_pass;

  json step_rule = json::array();
  for (int i = 1; i < s.rank; ++i) {
    const auto st = roots::verify_step_rule(s, i);
    const char* name = st == roots::StepRuleStatus::holds ? "holds"
                       : st == roots::StepRuleStatus::fails ? "fails"
                                                          : "not_applicable";
    if (st == roots::StepRuleStatus::fails) ok = false;
    step_rule.push_back({{"i", i}, {"status", name}});
  }
  j["step_rule"] = step_rule;

  json absorption = json::array();
  for (const auto& e : roots::absorption_certificate(s)) {
    absorption.push_back({{"generator", e.generator},
                          {"root", roots::root_str(e.root)},
                          {"power", e.power},
                          {"image", roots::root_str(e.image)},
                          {"contained", e.contained},
                          {"expected", e.expected},
                          {"pass", e.ok}});
    ok = ok && e.ok;
  }
  j["absorption"] = absorption;

  json disj = json::array();
  for (const auto& e : roots::disjointness_certificate(s)) {
    disj.push_back({{"power", e.power},
                    {"witness", roots::root_str(e.witness)},
                    {"image", roots::root_str(e.image)},
                    {"target", roots::root_str(e.target)},
                    {"pass", e.ok}});
    ok = ok && e.ok;
  }
  j["disjointness"] = disj;

  j["all_pass"] = ok;
  all_pass = all_pass && ok;
  return j;
}

json twisted_report(const twisted::Twisted& t, bool& all_pass) {
  const auto rep = twisted::verify_twisted_orbit(t);
  json j;
  j["series"] = rep.series;
  j["n"] = rep.rank;
  j["equations"] = equations_json(rep);
  bool ok = rep.all_pass;

  json absorption = json::array();
  for (const auto& e : twisted::twisted_absorption_certificate(t)) {
    absorption.push_back({{"what", e.what}, {"power", e.power},
                          {"detail", e.detail}, {"pass", e.ok}});
    ok = ok && e.ok;
  }
  j["absorption"] = absorption;

  j["all_pass"] = ok;
  all_pass = all_pass && ok;
  return j;
}

json rational_json(const cayley::Rational& r) {
  return {{"num", r.num}, {"den", r.den}};
}

json boundary_json(const sl::BoundaryReport& rep, bool timings) {
  json j;
  j["l"] = rep.l;
  j["q"] = rep.q;
  if (rep.group_order) j["group_order"] = *rep.group_order;
  j["s0_size"] = rep.s0_size;
  j["s_size"] = rep.s_size;
  j["boundary_size"] = rep.boundary_size;
  j["ratio"] = rational_json(rep.ratio);
  j["bound"] = rational_json(rep.bound);
  j["ratio_within_bound"] = rep.ratio_within_bound;
  j["cosets_disjoint"] = rep.cosets_disjoint;
  j["size_consistent"] = rep.size_consistent;
  j["boundary_disjoint_from_s"] = rep.boundary_disjoint_from_s;
  j["half_check"] = rep.half_check;
  j["degree"] = rep.degree;
  json cosets = json::array();
  for (const auto& c : rep.cosets)
    cosets.push_back({{"name", c.name}, {"size", c.size},
                      {"boundary_count", c.boundary_count}});
  j["cosets"] = cosets;
  j["sweep_checked"] = rep.sweep_checked;
  if (rep.sweep_checked) j["sweep_agrees"] = rep.sweep_agrees;
  if (timings) j["runtime_seconds"] = rep.runtime_seconds;
  return j;
}

bool boundary_ok(const sl::BoundaryReport& rep) {
  bool ok = rep.ratio_within_bound && rep.cosets_disjoint &&
            rep.size_consistent && rep.boundary_disjoint_from_s &&
            rep.half_check;
  if (rep.sweep_checked) ok = ok && rep.sweep_agrees;
  return ok;
}

json spectral_json(const spectral::SpectralReport& rep) {
  json j;
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["lambda2"] = rep.lambda2;
  j["gap"] = rep.gap;
  j["cheeger_lower"] = rep.cheeger_lower;
  if (rep.h_upper) j["h_upper"] = rational_json(*rep.h_upper);
  j["method"] = rep.method;
  j["residual"] = rep.residual;
  j["converged"] = rep.converged;
  j["iterations"] = rep.iterations;
  return j;
}

struct SeriesArg {
  std::vector<roots::Series> plain;
  std::vector<twisted::Twisted> tw;
};

SeriesArg resolve_series(const std::vector<std::string>& names, int max_rank) {
  SeriesArg out;
  auto add_plain = [&](roots::Family f) {
    for (int l = roots::min_rank(f); l <= max_rank; ++l)
      out.plain.push_back({f, l});
  };
  auto add_twisted = [&](twisted::Kind k) {
    for (int n = twisted::min_n(k); n <= max_rank; ++n) {
      const twisted::Twisted t{k, n};
      if (twisted::underlying(t).rank > 30) break;
      out.tw.push_back(t);
    }
  };
  for (const auto& name : names) {
    if (name == "A") add_plain(roots::Family::A);
    else if (name == "B") add_plain(roots::Family::B);
    else if (name == "C") add_plain(roots::Family::C);
    else if (name == "D") add_plain(roots::Family::D);
    else if (name == "A1odd") add_twisted(twisted::Kind::A_odd);
    else if (name == "A1even") add_twisted(twisted::Kind::A_even);
    else if (name == "D1") add_twisted(twisted::Kind::D);
    else throw CLI::ValidationError("--series", "unknown series " + name);
  }
  if (out.plain.empty() && out.tw.empty())
    throw CLI::ValidationError("--series", "no (series, rank) in range");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs of special linear groups: generating sets, "
               "orbit verification, exact boundary ratios, spectral gaps"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker count (default: all cores)");
  bool serial = false;
  app.add_flag("--serial", serial, "run every kernel on one thread");

  std::string output;
  app.add_option("--output,-o", output, "write primary output to a file");

  // verify-orbits
  auto* vo = app.add_subcommand("verify-orbits",
                                "check every orbit identity per series/rank");
  std::vector<std::string> vo_series;
  bool vo_all = false;
  int vo_max_rank = 12;
  vo->add_option("--series", vo_series,
                 "series names from {A,B,C,D,A1odd,A1even,D1}")
      ->delimiter(',');
  vo->add_flag("--all", vo_all, "all seven series");
  vo->add_option("--max-rank", vo_max_rank,
                 "largest rank (twisted: largest n)");

  // slgen
  auto* sg = app.add_subcommand("slgen",
                                "enumerate <A,B,C> and report the group order");
  int sg_l = 2;
  std::string sg_q = "2";
  bool sg_check = false;
  std::uint64_t sg_cap = 1u << 24;
  sg->add_option("--l", sg_l, "rank: the group is SL(l+1, q)")->required();
  sg->add_option("--q", sg_q, "field order (prime power)")->required();
  sg->add_flag("--check-order", sg_check, "compare with the classical formula");
  sg->add_option("--max-order", sg_cap, "walk cap");

  // boundary
  auto* bd = app.add_subcommand("boundary",
                                "exact boundary ratio of S inside SL(l+1, q)");
  int bd_l = 2;
  std::string bd_q = "2";
  bool bd_sweep = false;
  bool bd_timings = false;
  std::uint64_t bd_cap = 1u << 24;
  bd->add_option("--l", bd_l)->required();
  bd->add_option("--q", bd_q)->required();
  bd->add_flag("--sweep-oracle", bd_sweep,
               "recompute the boundary by full product sweep and compare");
  bd->add_flag("--timings", bd_timings, "include runtime in the report");
  bd->add_option("--max-order", bd_cap, "subgroup walk cap");

  // spectrum
  auto* sp = app.add_subcommand("spectrum",
                                "second adjacency eigenvalue and Cheeger check");
  int sp_l = 2;
  std::string sp_q = "2";
  std::string sp_mode = "dense";
  std::uint64_t sp_seed = 12345;
  std::uint64_t sp_cap = 1u << 24;
  sp->add_option("--l", sp_l)->required();
  sp->add_option("--q", sp_q)->required();
  sp->add_option("--mode", sp_mode, "dense | iter")
      ->check(CLI::IsMember({"dense", "iter"}));
  sp->add_option("--seed", sp_seed, "start-vector seed for iter mode");
  sp->add_option("--max-order", sp_cap, "walk cap");

  // export
  auto* ex = app.add_subcommand("export", "write the graph as an edge list");
  int ex_l = 2;
  std::string ex_q = "2";
  std::string ex_format = "edgelist";
  std::uint64_t ex_cap = 1u << 24;
  ex->add_option("--l", ex_l)->required();
  ex->add_option("--q", ex_q)->required();
  ex->add_option("--format", ex_format)->check(CLI::IsMember({"edgelist"}));
  ex->add_option("--max-order", ex_cap, "walk cap");

  // report
  auto* rp = app.add_subcommand("report", "CSV sweep over l and q lists");
  std::vector<int> rp_l;
  std::vector<std::string> rp_q;
  bool rp_csv = false;
  std::uint64_t rp_seed = 12345;
  std::uint64_t rp_cap = 100000;
  rp->add_flag("--csv", rp_csv, "emit CSV (the only supported format)");
  rp->add_option("--l", rp_l, "comma list of ranks")->delimiter(',')->required();
  rp->add_option("--q", rp_q, "comma list of field orders")
      ->delimiter(',')
      ->required();
  rp->add_option("--seed", rp_seed);
  rp->add_option("--max-order", rp_cap,
                 "largest group order for which lambda2 is computed");

  // global flags (--output, --threads, --serial) may follow the subcommand
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  cayley::set_threads(threads);
  const cayley::Exec exec = serial ? cayley::Exec::serial
                                   : cayley::Exec::parallel;

  try {
    if (vo->parsed()) {
      std::vector<std::string> names = vo_series;
      if (vo_all)
        names = {"A", "B", "C", "D", "A1odd", "A1even", "D1"};
      if (names.empty())
        throw CLI::ValidationError("--series", "pick series or pass --all");
      const SeriesArg sel = resolve_series(names, vo_max_rank);
      bool all_pass = true;
      json reports = json::array();
      for (const auto& s : sel.plain)
        reports.push_back(untwisted_report(s, all_pass));
      for (const auto& t : sel.tw)
        reports.push_back(twisted_report(t, all_pass));
      json j;
      j["reports"] = reports;
      j["all_pass"] = all_pass;
      emit(j.dump(2) + "\n", output);
      return all_pass ? kExitOk : kExitVerifyFail;
    }

    if (sg->parsed()) {
      auto field = make_field(sg_q);
      const sl::GenSet gens = sl::generating_set(field, sg_l);
      const sl::BfsResult bfs = sl::bfs_enumerate(gens, sg_cap, exec);
      json j;
      j["l"] = sg_l;
      j["q"] = field->q();
      j["lambda"] = field->literal(field->primitive());
      j["connection_size"] = gens.degree();
      j["bfs_order"] = bfs.count;
      j["complete"] = bfs.complete;
      bool match = true;
      if (sg_check) {
        const auto expected = sl::sl_order_wide(sg_l + 1, field->q());
        j["expected_order"] = sl::u128_str(expected);
        match = bfs.complete && static_cast<unsigned __int128>(bfs.count) ==
                                    expected;
        j["match"] = match;
      }
      emit(j.dump(2) + "\n", output);
      if (!bfs.complete) return kExitCap;
      return match ? kExitOk : kExitVerifyFail;
    }

    if (bd->parsed()) {
      auto field = make_field(bd_q);
      const auto rep = sl::boundary_exact(field, bd_l, bd_sweep, exec, bd_cap);
      json j = boundary_json(rep, bd_timings);
      j["lambda"] = field->literal(field->primitive());
      emit(j.dump(2) + "\n", output);
      return boundary_ok(rep) ? kExitOk : kExitVerifyFail;
    }

    if (sp->parsed()) {
      auto field = make_field(sp_q);
      const sl::GenSet gens = sl::generating_set(field, sp_l);
      const sl::BfsResult bfs = sl::bfs_enumerate(gens, sp_cap, exec);
      if (!bfs.complete) return kExitCap;
      const sl::Graph graph = sl::build_cayley_graph(gens, bfs, exec);
      spectral::SpectralReport rep =
          sp_mode == "dense" ? spectral::lambda2_dense(graph)
                             : spectral::lambda2_iterative(graph, sp_seed,
                                                           1e-6, 100000, exec);
      const auto brep = sl::boundary_exact(field, sp_l, false, exec, sp_cap);
      rep.h_upper = brep.ratio;
      const bool consistent = spectral::cheeger_consistent(rep, brep);
      json j = spectral_json(rep);
      j["l"] = sp_l;
      j["q"] = field->q();
      j["cheeger_consistent"] = consistent;
      emit(j.dump(2) + "\n", output);
      return rep.converged && consistent ? kExitOk : kExitVerifyFail;
    }

    if (ex->parsed()) {
      auto field = make_field(ex_q);
      const sl::GenSet gens = sl::generating_set(field, ex_l);
      const sl::BfsResult bfs = sl::bfs_enumerate(gens, ex_cap, exec);
      if (!bfs.complete) return kExitCap;
      const sl::Graph graph = sl::build_cayley_graph(gens, bfs, exec);
      std::ostringstream os;
      sl::write_edge_list(os, ex_l, field->q(), graph);
      emit(os.str(), output);
      return kExitOk;
    }

    if (rp->parsed()) {
      if (!rp_csv)
        throw CLI::ValidationError("--csv", "report only emits CSV");
      std::ostringstream os;
      os << "l,q,n,d,lambda2,gap,ratio_num,ratio_den\n";
      for (int l : rp_l) {
        for (const std::string& qspec : rp_q) {
          auto field = make_field(qspec);
          const std::uint64_t q = field->q();
          const auto brep = sl::boundary_exact(field, l, false, exec);
          const sl::GenSet gens = sl::generating_set(field, l);
          std::string lambda2 = "nan", gap = "nan";
          std::uint64_t order = brep.group_order.value_or(0);
          if (order > 0 && order <= rp_cap) {
            const sl::BfsResult bfs = sl::bfs_enumerate(gens, order, exec);
            const sl::Graph graph = sl::build_cayley_graph(gens, bfs, exec);
            const auto srep =
                spectral::lambda2_iterative(graph, rp_seed, 1e-6, 100000, exec);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.9g", srep.lambda2);
            lambda2 = buf;
            std::snprintf(buf, sizeof buf, "%.9g", srep.gap);
            gap = buf;
          }
          os << l << "," << q << "," << order << "," << gens.degree() << ","
             << lambda2 << "," << gap << "," << brep.ratio.num << ","
             << brep.ratio.den << "\n";
        }
      }
      emit(os.str(), output);
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    return what.find("cap") != std::string::npos ? kExitCap : kExitVerifyFail;
  }

  return kExitConfig;
}
