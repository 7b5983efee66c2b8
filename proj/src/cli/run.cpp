#include "solvspin/cli/run.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iomanip>
#include <sstream>

#include "solvspin/cli/algebra_file.hpp"
#include "solvspin/cli/json_io.hpp"
#include "solvspin/liealg/nilsoliton.hpp"

namespace solvspin::cli {

using exact::FloatScalar;
using exact::Rational;
using liealg::MetricLieAlgebra;
namespace fs = std::filesystem;

namespace {

struct Loaded {
  std::string bytes;
  std::optional<AlgebraFile> file;
  std::optional<halfspace::HalfSpaceModel> model;

  const MetricLieAlgebra<Rational>& algebra() const { return model ? model->algebra() : file->algebra; }
  std::optional<std::vector<std::size_t>> abelian() const {
    if (model) return std::vector<std::size_t>{0};
    return file->abelian;
  }
};

bool is_halfspace_text(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  return b != std::string::npos && s.compare(b, 9, "halfspace") == 0;
}

std::string first_line(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_first_of("\r\n", b);
  return s.substr(b, e == std::string::npos ? std::string::npos : e - b);
}

Loaded load(const std::string& input) {
  Loaded l;
  if (is_halfspace_text(input)) {
    l.bytes = input;
    l.model = halfspace::HalfSpaceModel::parse(input);
    return l;
  }
  l.bytes = read_file(input);
  if (is_halfspace_text(l.bytes)) {
    l.model = halfspace::HalfSpaceModel::parse(first_line(l.bytes));
  } else {
    l.file = parse_algebra(l.bytes, input);
  }
  return l;
}

MetricLieAlgebra<FloatScalar> to_float(const MetricLieAlgebra<Rational>& m, double tol) {
  const std::size_t n = m.dim();
  liealg::LieAlgebra<FloatScalar> l(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = m.algebra().c(i, j, k);
        if (!c.is_zero()) l.set_bracket(i, j, k, FloatScalar(c.to_double(), tol));
      }
  return {std::move(l), m.signs()};
}

/// Validation failure with a structured payload; maps to exit code 1.
struct Invalid {
  std::string message;
  json detail;
};

void require_jacobi(const MetricLieAlgebra<Rational>& m) {
  auto v = liealg::jacobi_check(m.algebra());
  if (!v.empty()) {
    throw std::invalid_argument("Jacobi identity fails for (e" + std::to_string(v[0].i + 1) + ", e" +
                                std::to_string(v[0].j + 1) + ", e" + std::to_string(v[0].k + 1) + ")");
  }
}

template <class S>
json validate_result(const MetricLieAlgebra<S>& m, const std::optional<std::vector<std::size_t>>& abelian,
                     bool& ok) {
  json out;
  out["dim"] = m.dim();
  out["signs"] = m.signs();
  auto viol = liealg::jacobi_check(m.algebra());
  json vj = json::array();
  for (const auto& v : viol) vj.push_back({{"i", v.i + 1}, {"j", v.j + 1}, {"k", v.k + 1}, {"residual", to_json(v.residual)}});
  out["jacobi"] = {{"valid", viol.empty()}, {"violations", std::move(vj)}};
  ok = viol.empty();
  if (!ok) return out;
  auto lcs = liealg::lower_central_series(m.algebra());
  out["lower_central_series"] = {{"dims", lcs.dims}, {"nilpotent", lcs.nilpotent}};
  if (abelian) {
    auto d = liealg::make_decomposition(m, *abelian);
    auto rep = liealg::check_standard(m, d);
    out["decomposition"] = {{"abelian", *abelian},
                            {"is_standard", rep.is_standard},
                            {"is_pseudo_iwasawa", rep.is_pseudo_iwasawa},
                            {"failures", rep.failures}};
    for (auto& a : out["decomposition"]["abelian"]) a = a.get<std::size_t>() + 1;
    ok = rep.is_standard;
  }
  return out;
}

template <class S>
json curvature_result(const MetricLieAlgebra<S>& m, const std::optional<std::vector<std::size_t>>& abelian) {
  const std::size_t n = m.dim();
  auto gamma = liealg::levi_civita(m);
  json conn = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!exact::is_zero(gamma(i, j, k)))
          conn.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", to_json(gamma(i, j, k))}});
  auto r = liealg::curvature(m, gamma);
  auto rd = liealg::ricci(m, r);
  json out{{"connection", std::move(conn)},
           {"ric", to_json(rd.ric)},
           {"ricci_operator", to_json(rd.ricci_op)},
           {"scalar_curvature", to_json(rd.scalar)}};
  auto lam = liealg::einstein_check(m, rd);
  out["einstein_constant"] = lam ? to_json(*lam) : json(nullptr);
  if (abelian) {
    auto d = liealg::make_decomposition(m, *abelian);
    if (liealg::check_standard(m, d).is_standard) {
      auto rs = liealg::ricci_standard(m, d);
      out["ricci_standard_agrees"] = rs.ric == rd.ric;
    }
  }
  return out;
}

template <class S>
json nilsoliton_json(const liealg::Nilsoliton<S>& n) {
  return json{{"lambda", to_json(n.lambda)}, {"derivation", to_json(n.derivation)}};
}

template <class S>
json nilsoliton_result(const MetricLieAlgebra<S>& m) {
  auto sol = liealg::nilsoliton_solve(m);
  return json{{"nilsoliton", sol ? nilsoliton_json(*sol) : json(nullptr)}};
}

json extend_exact(const MetricLieAlgebra<Rational>& m, std::optional<int> eps0) {
  auto e = liealg::einstein_extension(m, eps0);
  AlgebraFile out{e.algebra, std::vector<std::size_t>{0}};
  return json{{"nilsoliton", nilsoliton_json(e.nilsoliton)},
              {"scale", to_json(e.scale)},
              {"eps0", e.eps0},
              {"einstein_constant", e.einstein_constant ? to_json(*e.einstein_constant) : json(nullptr)},
              {"algebra", serialize_algebra(out)}};
}

json extend_float(const MetricLieAlgebra<FloatScalar>& m, std::optional<int> eps0) {
  auto sol = liealg::nilsoliton_solve(m);
  if (!sol) throw std::invalid_argument("no nilsoliton derivation exists");
  const double tr = sol->derivation.trace().value();
  const FloatScalar trf = sol->derivation.trace();
  if (trf.is_zero()) throw std::invalid_argument("nilsoliton derivation is traceless");
  const int e0 = eps0.value_or(tr > 0 ? 1 : -1);
  if (e0 * tr <= 0) throw std::invalid_argument("eps0 must have the sign of Tr D");
  const double c = std::sqrt(e0 / tr);
  auto [alg, dec] = liealg::extend_by_derivation(m, sol->derivation * FloatScalar(c, trf.tolerance()), e0);
  auto lam = liealg::einstein_check(alg);
  return json{{"nilsoliton", nilsoliton_json(*sol)},
              {"scale", c},
              {"eps0", e0},
              {"einstein_constant", lam ? to_json(*lam) : json(nullptr)},
              {"ricci_operator", to_json(liealg::ricci(alg).ricci_op)}};
}

json killing_halfspace_result(const halfspace::HalfSpaceModel& model, int k_bound, int m_bound) {
  auto rep = clifford::build_gammas(model.frame_signs());
  json branches = json::array();
  std::size_t combined = 0;
  for (const auto& lambda : halfspace::model_lambdas(model)) {
    auto sol = halfspace::solve_killing_halfspace(model, rep, lambda, {k_bound, m_bound});
    auto wider = halfspace::solve_killing_halfspace(model, rep, lambda, {k_bound + 1, m_bound + 1});
    bool residual_zero = true;
    bool amended = true;
    json fields = json::array();
    for (const auto& psi : sol.basis) {
      for (const auto& r : halfspace::killing_residual(model, rep, psi, lambda))
        residual_zero = residual_zero && halfspace::is_zero_field(r);
      amended = amended && halfspace::verify_amended_identity(model, rep, psi, lambda);
      fields.push_back(field_to_json(psi));
    }
    combined += sol.basis.size();
    branches.push_back({{"lambda", to_json(lambda)},
                        {"dimension", sol.basis.size()},
                        {"unknowns", sol.unknowns},
                        {"saturation_dimension", wider.basis.size()},
                        {"saturated", wider.basis.size() == sol.basis.size()},
                        {"residual_zero", residual_zero},
                        {"amended_identity", amended},
                        {"solutions", std::move(fields)}});
  }
  return json{{"model", model.to_string()},
              {"frame_signs", model.frame_signs()},
              {"bounds", {{"K", k_bound}, {"M", m_bound}}},
              {"spinor_dimension", rep.spinor_dim()},
              {"combined_dimension", combined},
              {"branches", std::move(branches)}};
}

json dispatch(const JobSpec& job, const Loaded& in, bool& ok, bool& used_float) {
  const auto& m = in.algebra();
  const bool fl = job.backend == Backend::Float;
  ok = true;
  used_float = false;
  switch (job.command) {
    case Command::Validate:
      used_float = fl;
      return fl ? validate_result(to_float(m, job.tol), in.abelian(), ok) : validate_result(m, in.abelian(), ok);
    case Command::Curvature:
      require_jacobi(m);
      used_float = fl;
      return fl ? curvature_result(to_float(m, job.tol), in.abelian()) : curvature_result(m, in.abelian());
    case Command::Nilsoliton:
      require_jacobi(m);
      used_float = fl;
      return fl ? nilsoliton_result(to_float(m, job.tol)) : nilsoliton_result(m);
    case Command::Extend:
      require_jacobi(m);
      used_float = fl;
      return fl ? extend_float(to_float(m, job.tol), job.eps0) : extend_exact(m, job.eps0);
    case Command::KillingInvariant: {
      require_jacobi(m);
      auto rep = clifford::build_gammas(m.signs());
      json out = to_json(killing::solve_invariant_killing(m, rep));
      out["signs"] = m.signs();
      return out;
    }
    case Command::KillingHalfspace:
      if (!in.model) throw std::invalid_argument("killing-halfspace needs a half-space model");
      return killing_halfspace_result(*in.model, job.k_bound, job.m_bound);
    case Command::Classify: {
      require_jacobi(m);
      auto ab = in.abelian();
      if (!ab) throw std::invalid_argument("classify needs an 'abelian:' line");
      return to_json(killing::classify_pseudo_iwasawa(m, liealg::make_decomposition(m, *ab)));
    }
  }
  throw std::logic_error("unknown command");
}

std::string scalar_text(const json& v) {
  if (v.is_object() && v.contains("radicand")) {
    std::vector<std::pair<std::string, std::string>> parts{
        {v["a"], ""}, {v["b"], "i"}, {v["c"], "w"}, {v["d"], "i*w"}};
    std::string s;
    for (const auto& [c, unit] : parts) {
      if (c == "0") continue;
      std::string term = unit.empty() ? c : (c == "1" ? unit : (c == "-1" ? "-" + unit : c + "*" + unit));
      if (!s.empty() && term[0] != '-') s += "+";
      s += term;
    }
    if (s.empty()) s = "0";
    if (v["radicand"] != "0") s += " (w^2=" + v["radicand"].get<std::string>() + ")";
    return s;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string headline(const json& r) {
  if (r.value("status", "") == "error" || r.value("status", "") == "invalid") return r.value("error", "");
  const json& res = r["result"];
  switch (*parse_command(r["command"].get<std::string>())) {
    case Command::Validate:
      return res["jacobi"]["valid"].get<bool>() ? "valid" : "Jacobi identity fails";
    case Command::Curvature:
      return "s = " + scalar_text(res["scalar_curvature"]);
    case Command::Nilsoliton:
      return res["nilsoliton"].is_null() ? "no nilsoliton" : "lambda = " + scalar_text(res["nilsoliton"]["lambda"]);
    case Command::Extend:
      return "einstein constant " + scalar_text(res["einstein_constant"]);
    case Command::KillingInvariant: {
      std::size_t total = 0;
      for (const auto& c : res["candidates"]) total += c["dimension"].get<std::size_t>();
      return "invariant solutions: " + std::to_string(total);
    }
    case Command::KillingHalfspace:
      return "combined dimension " + std::to_string(res["combined_dimension"].get<std::size_t>());
    case Command::Classify: {
      std::string v = res["verdict"];
      if (res.contains("reason")) v += " (" + res["reason"].get<std::string>() + ")";
      if (res.contains("radius")) v += " r=" + scalar_text(res["radius"]);
      return v;
    }
  }
  return "";
}

bool is_flat(const json& v) {
  if (v.is_primitive()) return true;
  if (v.is_object()) return v.contains("radicand");
  for (const auto& x : v)
    if (!(x.is_primitive() || (x.is_object() && x.contains("radicand")))) return false;
  return true;
}

void render(std::ostringstream& out, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto inline_value = [](const json& x) {
    if (!x.is_array()) return scalar_text(x);
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + scalar_text(x[i]);
    return s + "]";
  };
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.value().is_string() && it.value().get<std::string>().find('\n') != std::string::npos) {
        out << pad << it.key() << ":\n";
        std::istringstream lines(it.value().get<std::string>());
        for (std::string line; std::getline(lines, line);) out << pad << "  " << line << "\n";
      } else if (is_flat(it.value())) {
        out << pad << it.key() << ": " << inline_value(it.value()) << "\n";
      } else {
        out << pad << it.key() << ":\n";
        render(out, it.value(), indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (is_flat(x)) {
        out << pad << "- " << inline_value(x) << "\n";
      } else if (x.is_object() && std::all_of(x.begin(), x.end(), [](const json& y) { return is_flat(y) && !y.is_array(); })) {
        out << pad << "-";
        for (auto it = x.begin(); it != x.end(); ++it) out << " " << it.key() << "=" << scalar_text(it.value());
        out << "\n";
      } else {
        out << pad << "-\n";
        render(out, x, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

json batch_report(const JobSpec& job, const std::string& dir, int& exit_code) {
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::vector<std::future<json>> futures;
  for (const auto& f : files) futures.push_back(std::async(std::launch::async, [&job, f] { return run_one(job, f); }));
  json reports = json::array();
  json summary = json::array();
  for (auto& fut : futures) {
    json r = fut.get();
    exit_code = std::max(exit_code, r["exit_code"].get<int>());
    summary.push_back({{"input", r["input"]}, {"status", r["status"]}, {"headline", headline(r)}});
    reports.push_back(std::move(r));
  }
  return json{{"schema", 1}, {"command", to_string(job.command)}, {"batch", dir}, {"reports", std::move(reports)},
              {"summary", std::move(summary)}};
}

std::string render_batch(const json& b) {
  std::ostringstream out;
  for (const auto& r : b["reports"]) out << "== " << r["input"].get<std::string>() << " ==\n" << render_text(r) << "\n";
  std::size_t width = 5;
  for (const auto& s : b["summary"]) width = std::max(width, s["input"].get<std::string>().size());
  out << "summary (" << b["summary"].size() << " files)\n";
  out << std::left << std::setw(static_cast<int>(width) + 2) << "input" << std::setw(9) << "status" << "result\n";
  for (const auto& s : b["summary"])
    out << std::left << std::setw(static_cast<int>(width) + 2) << s["input"].get<std::string>() << std::setw(9)
        << s["status"].get<std::string>() << s["headline"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  static const std::vector<std::pair<std::string, Command>> names{
      {"validate", Command::Validate},
      {"curvature", Command::Curvature},
      {"nilsoliton", Command::Nilsoliton},
      {"extend", Command::Extend},
      {"killing-invariant", Command::KillingInvariant},
      {"killing-halfspace", Command::KillingHalfspace},
      {"classify", Command::Classify}};
  for (const auto& [n, c] : names)
    if (n == name) return c;
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Validate:
      return "validate";
    case Command::Curvature:
      return "curvature";
    case Command::Nilsoliton:
      return "nilsoliton";
    case Command::Extend:
      return "extend";
    case Command::KillingInvariant:
      return "killing-invariant";
    case Command::KillingHalfspace:
      return "killing-halfspace";
    default:
      return "classify";
  }
}

std::string to_string(Backend b) { return b == Backend::Float ? "float" : "exact"; }

Backend backend_from_env() {
  const char* v = std::getenv("SOLVSPIN_BACKEND");
  if (v == nullptr || std::string(v).empty() || std::string(v) == "exact") return Backend::Exact;
  if (std::string(v) == "float") return Backend::Float;
  throw std::invalid_argument("SOLVSPIN_BACKEND must be 'exact' or 'float', got '" + std::string(v) + "'");
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

json run_one(const JobSpec& job, const std::string& input) {
  const auto start = std::chrono::steady_clock::now();
  json report{{"schema", 1}, {"command", to_string(job.command)}, {"input", input}};
  bool used_float = false;
  try {
    Loaded in = load(input);
    report["input_digest"] = "sha256:" + sha256_hex(in.bytes);
    bool ok = true;
    report["result"] = dispatch(job, in, ok, used_float);
    report["status"] = ok ? "ok" : "invalid";
    report["exit_code"] = ok ? kExitOk : kExitInvalid;
  } catch (const std::invalid_argument& e) {
    report["status"] = "invalid";
    report["error"] = e.what();
    report["exit_code"] = kExitInvalid;
  } catch (const std::out_of_range& e) {
    report["status"] = "invalid";
    report["error"] = e.what();
    report["exit_code"] = kExitInvalid;
  } catch (const exact::IncompatibleExtension& e) {
    report["status"] = "invalid";
    report["error"] = e.what();
    report["exit_code"] = kExitInvalid;
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = std::string("internal error: ") + e.what();
    report["exit_code"] = kExitInternal;
  }
  report["backend"] = {{"requested", to_string(job.backend)}, {"used", used_float ? "float" : "exact"}};
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["timing"] = {{"elapsed_ms", ms}};
  return report;
}

RunResult run(const JobSpec& job) {
  RunResult out;
  std::vector<std::string> inputs = job.inputs;
  // a half-space model string split across shell words
  if (!inputs.empty() && inputs.front() == "halfspace") {
    std::string joined;
    for (const auto& w : inputs) joined += (joined.empty() ? "" : " ") + w;
    inputs = {joined};
  }
  json all = json::array();
  std::ostringstream text;
  for (const auto& in : inputs) {
    std::error_code ec;
    json r;
    if (!is_halfspace_text(in) && fs::is_directory(in, ec)) {
      int code = kExitOk;
      r = batch_report(job, in, code);
      out.exit_code = std::max(out.exit_code, code);
      text << render_batch(r);
    } else {
      r = run_one(job, in);
      out.exit_code = std::max(out.exit_code, r["exit_code"].get<int>());
      text << render_text(r);
    }
    all.push_back(std::move(r));
  }
  out.report = all.size() == 1 ? all.front() : all;
  out.output = job.format == Format::Json ? out.report.dump(2) + "\n" : text.str();
  return out;
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << "command: " << report["command"].get<std::string>() << "\n";
  out << "input: " << report["input"].get<std::string>() << "\n";
  if (report.contains("input_digest")) out << "digest: " << report["input_digest"].get<std::string>() << "\n";
  out << "backend: " << report["backend"]["used"].get<std::string>();
  if (report["backend"]["requested"] != report["backend"]["used"])
    out << " (requested " << report["backend"]["requested"].get<std::string>() << ")";
  out << "\nstatus: " << report["status"].get<std::string>() << "\n";
  if (report.contains("error")) out << "error: " << report["error"].get<std::string>() << "\n";
  if (report.contains("result")) render(out, report["result"], 0);
  return out.str();
}

json without_timing(json report) {
  if (report.is_object()) {
    report.erase("timing");
    for (auto& [k, v] : report.items()) v = without_timing(v);
  } else if (report.is_array()) {
    for (auto& v : report) v = without_timing(v);
  }
  return report;
}

}  // namespace solvspin::cli
