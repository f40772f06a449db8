#include "hfs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "hfs/cfk/complex.hpp"
#include "hfs/cfk/region.hpp"
#include "hfs/cfk/staircase.hpp"
#include "hfs/contact.hpp"
#include "hfs/error.hpp"
#include "hfs/f2/kernels.hpp"
#include "hfs/farey.hpp"
#include "hfs/heegaard.hpp"
#include "hfs/surgery.hpp"

namespace hfs::cli {

namespace {

using json = nlohmann::json;

struct Globals {
  bool json_out = false;
  bool oracle = false;
  unsigned threads = 1;
  std::string kernel = "auto";
};

// What a command hands back: the report body plus a plain-text rendering.
struct Outcome {
  json inputs = json::object();
  json results = json::object();
  std::vector<std::string> warnings;
  std::string text;
};

using Handler = std::function<Outcome()>;

const f2::simd::Kernels& pick_kernels(const std::string& name) {
  if (name == "auto") return f2::simd::active();
  const auto backend = f2::simd::parse_backend(name);
  if (!backend) throw Error(ErrorKind::ValidationError, "unknown kernel '" + name + "'");
  const auto* k = f2::simd::kernels_for(*backend);
  if (k == nullptr) {
    throw Error(ErrorKind::ValidationError, "kernel '" + name + "' is not available on this CPU");
  }
  return *k;
}

std::pair<std::int64_t, std::int64_t> raw_slope(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError(1, "bad slope '" + text + "'");
    }
    return v;
  };
  const std::string_view view(text);
  const auto slash = view.find('/');
  if (slash == std::string_view::npos) return {number(view), 1};
  return {number(view.substr(0, slash)), number(view.substr(slash + 1))};
}

json slopes(const std::vector<farey::Slope>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

std::string joined(const std::vector<farey::Slope>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s.str();
  return out;
}

json gate_json(const surgery::Gate& g) {
  return {{"check", g.describe()}, {"genus", g.genus}, {"n", g.n}, {"ok", g.ok}};
}

json ranks_json(const std::map<int, std::size_t>& ranks, const char* key) {
  json out = json::array();
  for (const auto& [level, rank] : ranks) out.push_back({{key, level}, {"rank", rank}});
  return out;
}

std::vector<std::string> window_warnings(int n) {
  if (n % 2 == 0) return {};
  const auto range = surgery::spinc_range(n);
  const auto window = surgery::spinc_window(n);
  auto interval = [](const std::vector<int>& v) {
    return v.empty() ? std::string("[]")
                     : "[" + std::to_string(v.front()) + ", " + std::to_string(v.back()) + "]";
  };
  return {"n=" + std::to_string(n) + " is odd: the displayed range " + interval(range) + " has " +
          std::to_string(range.size()) + " values; tables use the length-" + std::to_string(n) +
          " window " + interval(window)};
}

std::string witness_text(const std::vector<std::vector<std::string>>& witnesses) {
  std::string out;
  for (const auto& w : witnesses) {
    std::string cycle;
    for (const auto& label : w) cycle += (cycle.empty() ? "" : " + ") + label;
    out += "witness: " + cycle + "\n";
  }
  return out;
}

// --- cfk ---------------------------------------------------------------

Outcome cfk_validate(const std::string& path) {
  const auto c = cfk::load_cfk(path);
  Outcome o;
  o.inputs = {{"file", path}};
  o.results = {{"arrows", c.arrows().size()},
               {"generators", c.size()},
               {"maslov", c.has_maslov()},
               {"valid", true}};
  o.text = "valid: " + std::to_string(c.size()) + " generators, " +
           std::to_string(c.arrows().size()) + " arrows\n";
  return o;
}

Outcome cfk_hfk(const std::string& path) {
  const auto c = cfk::load_cfk(path);
  const auto ranks = cfk::hfk_ranks(c);
  Outcome o;
  o.inputs = {{"file", path}};
  o.results = {{"ranks", ranks_json(ranks, "alexander")}};
  for (auto it = ranks.rbegin(); it != ranks.rend(); ++it) {
    o.text += "HFK(" + std::to_string(it->first) + ") rank " + std::to_string(it->second) + "\n";
  }
  return o;
}

Outcome cfk_genus(const std::string& path) {
  const auto c = cfk::load_cfk(path);
  Outcome o;
  o.inputs = {{"file", path}};
  const int g = cfk::genus(c);
  const bool fibered = cfk::is_fibered_like(c);
  o.results = {{"fibered_like", fibered}, {"flip_symmetric", cfk::check_flip_symmetry(c)},
               {"genus", g}};
  o.text = "genus: " + std::to_string(g) + "\nfibered_like: " + (fibered ? "true" : "false") + "\n";
  return o;
}

Outcome cfk_staircase(int k, const std::string& hand, const std::string& out_path) {
  if (k < 1) throw Error(ErrorKind::ValidationError, "k must be positive");
  const auto c = cfk::staircase(k, hand == "right" ? cfk::Hand::Right : cfk::Hand::Left);
  const auto text = cfk::to_cfk(c);
  Outcome o;
  o.inputs = {{"hand", hand}, {"k", k}};
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text)) throw Error(ErrorKind::ValidationError, "cannot write '" + out_path + "'");
    o.inputs["out"] = out_path;
    o.results = {{"written", out_path}};
    o.text = "wrote " + out_path + "\n";
  } else {
    o.results = {{"cfk", text}};
    o.text = text;
  }
  return o;
}

// --- surgery -----------------------------------------------------------

Outcome surgery_hf(const Globals& gl, int n, int m, const std::string& path) {
  const auto c = cfk::load_cfk(path);
  const auto gate = surgery::require_large_surgery(c, n);
  surgery::Options opts{gl.threads, gl.oracle, &pick_kernels(gl.kernel)};
  const auto slice = surgery::hf_hat_surgery(c, n, m, opts);
  Outcome o;
  o.inputs = {{"file", path}, {"m", m}, {"n", n}, {"oracle", gl.oracle}};
  o.results = {{"gate", gate_json(gate)},
               {"m", slice.m},
               {"ranks", ranks_json(slice.ranks, "level")},
               {"total", slice.total}};
  o.warnings = window_warnings(n);
  o.text = gate.describe() + "\nm: " + std::to_string(slice.m) + "\nrank: " +
           std::to_string(slice.total) + "\n";
  if (slice.oracle_total) {
    o.results["oracle_total"] = *slice.oracle_total;
    o.results["oracle_agrees"] = *slice.oracle_total == slice.total;
    o.text += "oracle rank: " + std::to_string(*slice.oracle_total) + "\n";
    if (*slice.oracle_total != slice.total) o.warnings.push_back("oracle disagrees with direct rank");
  }
  return o;
}

Outcome surgery_core_table(const Globals& gl, int n, const std::string& path) {
  const auto c = cfk::load_cfk(path);
  const auto gate = surgery::require_large_surgery(c, n);
  surgery::Options opts{gl.threads, gl.oracle, &pick_kernels(gl.kernel)};
  const auto table = surgery::core_hfk_table(c, n, opts);
  Outcome o;
  o.inputs = {{"file", path}, {"n", n}, {"oracle", gl.oracle}};
  json rows = json::array();
  o.text = gate.describe() + "\n";
  o.text += "m\trkS\trkQ\trkX\trelA_S\trelA_Q\n";
  for (const auto& r : table.rows) {
    json row = {{"m", r.m},           {"rank_q", r.rank_q},   {"rank_s", r.rank_s},
                {"rank_x", r.rank_x}, {"rel_a_q", r.rel_a_q}, {"rel_a_s", r.rel_a_s}};
    if (r.oracle_s) row["oracle_s"] = *r.oracle_s;
    if (r.oracle_q) row["oracle_q"] = *r.oracle_q;
    if (r.oracle_x) row["oracle_x"] = *r.oracle_x;
    rows.push_back(row);
    o.text += std::to_string(r.m) + "\t" + std::to_string(r.rank_s) + "\t" +
              std::to_string(r.rank_q) + "\t" + std::to_string(r.rank_x) + "\t" +
              std::to_string(r.rel_a_s) + "\t" + std::to_string(r.rel_a_q) + "\n";
  }
  o.results = {{"gate", gate_json(gate)},
               {"grading_equations_hold", table.grading_equations_hold()},
               {"rows", rows},
               {"total_hf", table.total_hf()},
               {"total_hfk", table.total_hfk()}};
  if (const auto low = table.lowest_nonzero_sub_row()) o.results["lowest_nonzero_sub_row"] = *low;
  o.text += "total HFK: " + std::to_string(table.total_hfk()) + "\ntotal HF: " +
            std::to_string(table.total_hf()) + "\n";
  if (gl.oracle) {
    o.results["oracle_agrees"] = table.oracle_agrees();
    o.text += std::string("oracle: ") + (table.oracle_agrees() ? "agrees" : "DISAGREES") + "\n";
    if (!table.oracle_agrees()) o.warnings.push_back("oracle disagrees with direct ranks");
  }
  const auto window_notes = window_warnings(n);
  o.warnings.insert(o.warnings.begin(), window_notes.begin(), window_notes.end());
  return o;
}

Outcome surgery_lspace(const Globals& gl, int n, const std::string& path) {
  const auto c = cfk::load_cfk(path);
  const auto gate = surgery::require_large_surgery(c, n);
  surgery::Options opts{gl.threads, gl.oracle, &pick_kernels(gl.kernel)};
  const auto cert = surgery::lspace_certificate(c, n, opts);
  Outcome o;
  o.inputs = {{"file", path}, {"n", n}, {"oracle", gl.oracle}};
  o.results = {{"gate", gate_json(gate)},
               {"hf_total", cert.hf_total},
               {"hfk_total", cert.hfk_total},
               {"holds", cert.holds},
               {"order", cert.order}};
  o.warnings = window_warnings(n);
  o.text = gate.describe() + "\nrk HFK = " + std::to_string(cert.hfk_total) + ", rk HF = " +
           std::to_string(cert.hf_total) + ", order = " + std::to_string(cert.order) +
           "\ncertificate: " + (cert.holds ? "true" : "false") + "\n";
  return o;
}

// --- contact -----------------------------------------------------------

Outcome contact_delta(const Globals& gl, const std::string& path) {
  const auto c = cfk::load_cfk(path);
  const auto d = contact::delta_star(c, pick_kernels(gl.kernel));
  Outcome o;
  o.inputs = {{"file", path}};
  const auto witnesses = d.map.kernel_witnesses();
  o.results = {{"genus", d.genus},
               {"kernel_rank", d.kernel_rank},
               {"nonzero", d.kernel_rank > 0},
               {"rank", d.map.rank()},
               {"witnesses", witnesses}};
  o.text = "genus: " + std::to_string(d.genus) + "\nrank delta_*: " + std::to_string(d.map.rank()) +
           "\nkernel rank: " + std::to_string(d.kernel_rank) + "\n" + witness_text(witnesses) +
           "c(xi) " + (d.kernel_rank > 0 ? "nonzero" : "zero") + "\n";
  return o;
}

Outcome contact_verdict(const Globals& gl, const std::string& slope, const std::string& path) {
  const auto c = cfk::load_cfk(path);
  const auto [p, q] = raw_slope(slope);
  const auto v = contact::slope_verdict(c, p, q, pick_kernels(gl.kernel));
  Outcome o;
  o.inputs = {{"file", path}, {"slope", slope}};
  const auto& cert = v.certificate;
  json cj = {{"reason", cert.reason}, {"witnesses", cert.witnesses}};
  if (cert.kernel_rank) cj["kernel_rank"] = *cert.kernel_rank;
  if (cert.gate) cj["gate"] = gate_json(*cert.gate);
  if (cert.path) {
    cj["path"] = {{"back_slopes", slopes(cert.path->back_slopes)},
                  {"minimality", "unverified"},
                  {"surgeries", slopes(cert.path->surgeries)}};
  }
  o.results = {{"certificate", cj}, {"status", std::string(contact::to_string(v.status))}};
  o.text = std::string(contact::to_string(v.status)) + "\n";
  if (cert.gate) o.text += cert.gate->describe() + "\n";
  o.text += "reason: " + cert.reason + "\n" + witness_text(cert.witnesses);
  if (cert.path) o.text += "surgeries: " + joined(cert.path->surgeries) + "\n";
  return o;
}

// --- farey -------------------------------------------------------------

Outcome farey_path(std::int64_t from, const std::string& to) {
  const auto path = farey::surgery_path(from, farey::parse_slope(to));
  Outcome o;
  o.inputs = {{"from", from}, {"to", to}};
  o.results = {{"back_slopes", slopes(path.back_slopes)},
               {"minimality", "unverified"},
               {"surgeries", slopes(path.surgeries)},
               {"well_formed", path.well_formed()}};
  o.text = "back slopes: " + joined(path.back_slopes) + "\nsurgeries: " + joined(path.surgeries) + "\n";
  return o;
}

Outcome farey_slamdunk(const std::string& slope, std::int64_t n) {
  const auto r = farey::slam_dunk(farey::parse_slope(slope), n);
  Outcome o;
  o.inputs = {{"n", n}, {"slope", slope}};
  o.results = {{"r", r.str()}};
  o.text = "r: " + r.str() + "\n";
  return o;
}

// --- heegaard ----------------------------------------------------------

Outcome heegaard_grading(const std::string& path, const std::string& x, const std::string& y) {
  const auto d = heegaard::load_domain(path);
  const auto nx = heegaard::point_measure(d, x);
  const auto ny = heegaard::point_measure(d, y);
  const auto diff = nx - ny;
  const bool integral = diff.denominator() == 1;
  Outcome o;
  o.inputs = {{"file", path}, {"x", x}, {"y", y}};
  o.results = {{"difference", heegaard::to_string(diff)},
               {"integral", integral},
               {"measure_x", heegaard::to_string(nx)},
               {"measure_y", heegaard::to_string(ny)}};
  if (!integral) {
    o.warnings.push_back("A(x) - A(y) = " + heegaard::to_string(diff) +
                         " is not an integer; the model is not a genuine periodic domain");
  }
  o.text = "n_x = " + heegaard::to_string(nx) + "\nn_y = " + heegaard::to_string(ny) +
           "\nA(x) - A(y) = " + heegaard::to_string(diff) + "\n";
  return o;
}

Outcome heegaard_winding(long long a, long long q) {
  const auto w = heegaard::winding_distinct(a, q);
  Outcome o;
  o.inputs = {{"a", a}, {"q", q}};
  o.results = {{"distinct", w.distinct}, {"gcd", std::gcd(a, q)}, {"witness", nullptr}};
  o.text = std::string("distinct: ") + (w.distinct ? "true" : "false") + "\n";
  if (w.witness) {
    o.results["witness"] = {w.witness->first, w.witness->second};
    o.text += "witness: r_lambda=" + std::to_string(w.witness->first) +
              ", r_mu=" + std::to_string(w.witness->second) + "\n";
  }
  return o;
}

Outcome heegaard_cable(long long p, long long P) {
  const auto c = heegaard::cable_arithmetic(p, P);
  Outcome o;
  o.inputs = {{"P", P}, {"p", p}};
  o.results = {{"copies", c.copies}, {"order", c.order}};
  o.text = "order p' = " + std::to_string(c.order) + "\ncopies R = " + std::to_string(c.copies) + "\n";
  return o;
}

// ------------------------------------------------------------------------

void emit(const Globals& gl, const std::string& command, const Outcome& o, std::ostream& out,
          std::ostream& err) {
  if (gl.json_out) {
    json report = {{"command", command},
                   {"inputs", o.inputs},
                   {"results", o.results},
                   {"warnings", o.warnings},
                   {"version", kReportVersion}};
    out << report.dump(2) << "\n";
    return;
  }
  out << o.text;
  for (const auto& w : o.warnings) err << "warning: " << w << "\n";
}

int fail(const Globals& gl, const std::string& command, const Error& e, std::ostream& out,
         std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (gl.json_out) {
    json report = {{"command", command},
                   {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}},
                   {"version", kReportVersion}};
    out << report.dump(2) << "\n";
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot Floer surgery and contact-invariant calculator", "hfs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_flag("--json", gl.json_out, "canonical JSON report on stdout");
  app.add_flag("--oracle", gl.oracle, "cross-check ranks by truncation recomputation");
  app.add_option("--threads", gl.threads, "worker threads for per-m tables")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--kernel", gl.kernel, "GF(2) kernel backend")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  std::string command;
  Handler handler;
  auto bind = [&](CLI::App* sub, std::string name, Handler h) {
    sub->callback([&command, &handler, name = std::move(name), h = std::move(h)] {
      command = name;
      handler = h;
    });
  };

  std::string file, out_path, hand, slope, to, x, y;
  int k = 0, n = 0, m = 0;
  std::int64_t from = 0, nn = 0;
  long long a = 0, q = 0, p = 0, P = 0;

  auto* cfk_cmd = app.add_subcommand("cfk", "bifiltered complexes")->require_subcommand(1);
  auto* validate = cfk_cmd->add_subcommand("validate", "parse and check a cfk v1 file");
  validate->add_option("file", file)->required();
  bind(validate, "cfk validate", [&] { return cfk_validate(file); });
  auto* hfk = cfk_cmd->add_subcommand("hfk", "knot Floer homology ranks");
  hfk->add_option("file", file)->required();
  bind(hfk, "cfk hfk", [&] { return cfk_hfk(file); });
  auto* genus = cfk_cmd->add_subcommand("genus", "genus and fiberedness");
  genus->add_option("file", file)->required();
  bind(genus, "cfk genus", [&] { return cfk_genus(file); });
  auto* stair = cfk_cmd->add_subcommand("staircase", "T(2,2k+1) staircase complex");
  stair->add_option("--k", k)->required();
  stair->add_option("--hand", hand)->required()->check(CLI::IsMember({"right", "left"}));
  stair->add_option("--out", out_path);
  bind(stair, "cfk staircase", [&] { return cfk_staircase(k, hand, out_path); });

  auto* surg = app.add_subcommand("surgery", "large integral surgery")->require_subcommand(1);
  auto* hf = surg->add_subcommand("hf", "HF-hat of n-surgery in one Spin^c slot");
  hf->add_option("--n", n)->required();
  hf->add_option("--m", m)->required();
  hf->add_option("file", file)->required();
  bind(hf, "surgery hf", [&] { return surgery_hf(gl, n, m, file); });
  auto* core = surg->add_subcommand("core-table", "knot Floer homology of the surgery core");
  core->add_option("--n", n)->required();
  core->add_option("file", file)->required();
  bind(core, "surgery core-table", [&] { return surgery_core_table(gl, n, file); });
  auto* lspace = surg->add_subcommand("lspace", "rank-equality certificate");
  lspace->add_option("--n", n)->required();
  lspace->add_option("file", file)->required();
  bind(lspace, "surgery lspace", [&] { return surgery_lspace(gl, n, file); });

  auto* cont = app.add_subcommand("contact", "contact invariant criteria")->require_subcommand(1);
  auto* delta = cont->add_subcommand("delta", "connecting map into the top group");
  delta->add_option("file", file)->required();
  bind(delta, "contact delta", [&] { return contact_delta(gl, file); });
  auto* verdict = cont->add_subcommand("verdict", "nonvanishing verdict for a surgery slope");
  verdict->add_option("--slope", slope)->required();
  verdict->add_option("file", file)->required();
  bind(verdict, "contact verdict", [&] { return contact_verdict(gl, slope, file); });

  auto* far = app.add_subcommand("farey", "slope planning")->require_subcommand(1);
  auto* path = far->add_subcommand("path", "Legendrian surgery path from n to p/q");
  path->add_option("--from", from)->required();
  path->add_option("--to", to)->required();
  bind(path, "farey path", [&] { return farey_path(from, to); });
  auto* dunk = far->add_subcommand("slamdunk", "meridian coefficient r = q/(qn-p)");
  dunk->add_option("--slope", slope)->required();
  dunk->add_option("--n", nn)->required();
  bind(dunk, "farey slamdunk", [&] { return farey_slamdunk(slope, nn); });

  auto* hee = app.add_subcommand("heegaard", "periodic domain arithmetic")->require_subcommand(1);
  auto* grading = hee->add_subcommand("grading", "Alexander difference from a domain model");
  grading->add_option("file", file)->required();
  grading->add_option("--x", x)->required();
  grading->add_option("--y", y)->required();
  bind(grading, "heegaard grading", [&] { return heegaard_grading(file, x, y); });
  auto* winding = hee->add_subcommand("winding", "winding-region distinctness");
  winding->add_option("--a", a)->required();
  winding->add_option("--q", q)->required();
  bind(winding, "heegaard winding", [&] { return heegaard_winding(a, q); });
  auto* cable = hee->add_subcommand("cable", "cable order and copy count");
  cable->add_option("--p", p)->required();
  cable->add_option("--P", P)->required();
  bind(cable, "heegaard cable", [&] { return heegaard_cable(p, P); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!handler) {
    err << "usage error: no command given\n";
    return 2;
  }

  try {
    emit(gl, command, handler(), out, err);
    return 0;
  } catch (const Error& e) {
    return fail(gl, command, e, out, err);
  }
}

}  // namespace hfs::cli
