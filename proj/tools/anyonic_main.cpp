// anyonic -- file-driven front end over the shared-library C API.
//
// Subcommands: model-info, validate, entropy, measure, infer, topo, ace,
// limit-check, example-fib4, example-fib-pure, sweep. Exit codes: 0 success,
// 1 validation/computation failure, 2 usage error.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anyonic/anyonic.h"

namespace {

using nlohmann::json;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Display width as code points, so UTF-8 charge labels align.
size_t width_of(const std::string& s) {
  size_t w = 0;
  for (const unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++w;
  return w;
}

struct Options {
  std::string format = "table";  // table|csv|json
  std::string out_path;
  std::string builtin;
  std::string model_path;
  std::string state_path;
  double q = -1.0;
  std::string p_csv;
  std::string sweep_spec;
  double tol = 1e-10;
  long seed = 12345;  // reserved for randomized extensions; commands are deterministic
};

int exit_code_for(int status) {
  if (status == ANYONIC_OK) return 0;
  return status == ANYONIC_ERR_ARGUMENT ? 2 : 1;
}

[[noreturn]] void fail(int status) {
  std::cerr << "error: " << anyonic_last_error() << "\n";
  std::exit(exit_code_for(status));
}

void check(int status) {
  if (status != ANYONIC_OK) fail(status);
}

struct ModelHandle {
  anyonic_model* ptr = nullptr;
  ~ModelHandle() { anyonic_model_free(ptr); }
};

struct StateHandle {
  anyonic_state* ptr = nullptr;
  StateHandle() = default;
  explicit StateHandle(anyonic_state* p) : ptr(p) {}
  StateHandle(StateHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  StateHandle& operator=(StateHandle&& o) noexcept {
    std::swap(ptr, o.ptr);
    return *this;
  }
  StateHandle(const StateHandle&) = delete;
  StateHandle& operator=(const StateHandle&) = delete;
  ~StateHandle() { anyonic_state_free(ptr); }
};

struct RecordHandle {
  anyonic_record* ptr = nullptr;
  ~RecordHandle() { anyonic_record_free(ptr); }
};

void load_model(const Options& opt, ModelHandle& model) {
  if (!opt.builtin.empty() && !opt.model_path.empty()) {
    std::cerr << "error: give either --builtin or --model, not both\n";
    std::exit(2);
  }
  if (!opt.builtin.empty())
    check(anyonic_model_builtin(opt.builtin.c_str(), &model.ptr));
  else if (!opt.model_path.empty())
    check(anyonic_model_load(opt.model_path.c_str(), &model.ptr));
}

StateHandle load_state(const Options& opt) {
  if (opt.state_path.empty()) {
    std::cerr << "error: this command needs --state PATH\n";
    std::exit(2);
  }
  ModelHandle model;
  load_model(opt, model);
  StateHandle state;
  check(anyonic_state_load(opt.state_path.c_str(), model.ptr, &state.ptr));
  return state;
}

std::array<double, 5> parse_p(const std::string& csv) {
  std::array<double, 5> p{};
  std::stringstream ss(csv);
  std::string item;
  size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 5) {
      std::cerr << "error: --p needs exactly five comma-separated values\n";
      std::exit(2);
    }
    try {
      p[k++] = std::stod(item);
    } catch (const std::exception&) {
      std::cerr << "error: bad --p entry \"" << item << "\"\n";
      std::exit(2);
    }
  }
  if (k != 5) {
    std::cerr << "error: --p needs exactly five comma-separated values\n";
    std::exit(2);
  }
  return p;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) {
    std::cerr << "error: cannot write " << opt.out_path << "\n";
    std::exit(1);
  }
  out << text;
}

/// name/value report rendered per --format.
std::string scalar_report(const Options& opt,
                          const std::vector<std::pair<std::string, std::string>>& rows,
                          const std::vector<std::string>& notes = {}) {
  std::ostringstream os;
  if (opt.format == "json") {
    json doc;
    for (const auto& [k, v] : rows) {
      try {
        doc[k] = std::stod(v);
      } catch (const std::exception&) {
        doc[k] = v;
      }
    }
    if (!notes.empty()) doc["notes"] = notes;
    os << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    os << "name,value\n";
    for (const auto& [k, v] : rows) {
      const bool quote = v.find(',') != std::string::npos;
      os << k << "," << (quote ? "\"" + v + "\"" : v) << "\n";
    }
  } else {
    size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, width_of(k));
    for (const auto& [k, v] : rows)
      os << k << std::string(width - width_of(k), ' ') << " = " << v << "\n";
    for (const auto& note : notes) os << "note: " << note << "\n";
  }
  return os.str();
}

int cmd_model_info(const Options& opt) {
  ModelHandle model;
  load_model(opt, model);
  if (!model.ptr) {
    std::cerr << "error: model-info needs --builtin NAME or --model PATH\n";
    return 2;
  }
  int pass = 0;
  double residual = 0.0;
  check(anyonic_model_verify(model.ptr, opt.tol, &pass, &residual, nullptr));

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("model", anyonic_model_name(model.ptr));
  const int n = anyonic_model_charge_count(model.ptr);
  std::string charges;
  for (int c = 0; c < n; ++c) {
    if (c) charges += ", ";
    charges += anyonic_model_charge_label(model.ptr, c);
  }
  rows.emplace_back("charges", charges);
  for (int c = 0; c < n; ++c) {
    double d = 0.0;
    check(anyonic_model_qdim(model.ptr, c, &d));
    rows.emplace_back(std::string("d(") + anyonic_model_charge_label(model.ptr, c) + ")",
                      fmt12(d));
  }
  double total = 0.0;
  check(anyonic_model_total_qdim(model.ptr, &total));
  rows.emplace_back("D", fmt12(total));
  rows.emplace_back("pentagon", pass ? "pass" : "fail");
  rows.emplace_back("max_residual", fmt12(residual));
  emit(opt, scalar_report(opt, rows));
  return pass ? 0 : 1;
}

int cmd_validate(const Options& opt) {
  if (!opt.state_path.empty()) {
    StateHandle state = load_state(opt);  // exits with the violated invariant
    char* labels = nullptr;
    check(anyonic_state_basis_labels(state.ptr, &labels));
    std::string basis_text = labels ? labels : "";
    anyonic_string_free(labels);
    emit(opt, scalar_report(opt, {{"state", opt.state_path}, {"validation", "pass"}}) +
                  basis_text);
    return 0;
  }
  ModelHandle model;
  load_model(opt, model);
  if (!model.ptr) {
    std::cerr << "error: validate needs --model PATH, --builtin NAME or --state PATH\n";
    return 2;
  }
  int pass = 0;
  double residual = 0.0;
  char* report = nullptr;
  check(anyonic_model_verify(model.ptr, opt.tol, &pass, &residual, &report));
  std::string text = report ? report : "";
  anyonic_string_free(report);
  emit(opt, text);
  return pass ? 0 : 1;
}

int cmd_scalar(const Options& opt, const char* name,
               int (*fn)(const anyonic_state*, double*)) {
  StateHandle state = load_state(opt);
  double value = 0.0;
  check(fn(state.ptr, &value));
  emit(opt, scalar_report(opt, {{name, fmt12(value)}}));
  return 0;
}

int cmd_measure(const Options& opt) {
  StateHandle state = load_state(opt);
  RecordHandle record;
  check(anyonic_state_measure(state.ptr, &record.ptr));
  const anyonic_model* model = anyonic_state_model(state.ptr);

  std::ostringstream os;
  const int count = anyonic_record_count(record.ptr);
  if (opt.format == "json") {
    json rows = json::array();
    for (int k = 0; k < count; ++k) {
      int a, i, b, j;
      double value;
      check(anyonic_record_entry(record.ptr, k, &a, &i, &b, &j, &value));
      rows.push_back({{"a", anyonic_model_charge_label(model, a)},
                      {"i", i},
                      {"b", anyonic_model_charge_label(model, b)},
                      {"j", j},
                      {"value", value}});
    }
    os << rows.dump(2) << "\n";
  } else {
    os << "a,i,b,j,value\n";
    for (int k = 0; k < count; ++k) {
      int a, i, b, j;
      double value;
      check(anyonic_record_entry(record.ptr, k, &a, &i, &b, &j, &value));
      os << anyonic_model_charge_label(model, a) << "," << i << ","
         << anyonic_model_charge_label(model, b) << "," << j << "," << fmt12(value) << "\n";
    }
  }
  emit(opt, os.str());
  return 0;
}

int cmd_infer(const Options& opt) {
  StateHandle state = load_state(opt);
  StateHandle inferred;
  check(anyonic_state_infer(state.ptr, &inferred.ptr));
  if (opt.format == "json") {
    char* text = nullptr;
    check(anyonic_state_dump(inferred.ptr, &text));
    std::string doc = text;
    anyonic_string_free(text);
    emit(opt, doc + "\n");
    return 0;
  }
  double s_rho = 0.0, s_inf = 0.0, topo = 0.0;
  check(anyonic_state_entropy(state.ptr, &s_rho));
  check(anyonic_state_entropy(inferred.ptr, &s_inf));
  check(anyonic_state_topo(state.ptr, &topo));
  emit(opt, scalar_report(opt, {{"entropy_rho", fmt12(s_rho)},
                                {"entropy_inferred", fmt12(s_inf)},
                                {"c_topo", fmt12(topo)}},
                          {"use --format json to emit the inferred state document"}));
  return 0;
}

int cmd_limit_check(const Options& opt) {
  StateHandle state = load_state(opt);
  const std::vector<double> ps = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  std::vector<double> values(ps.size());
  double extrapolated = 0.0;
  check(anyonic_state_topo_limit(state.ptr, ps.data(), static_cast<int>(ps.size()),
                                 values.data(), &extrapolated));
  double direct = 0.0;
  check(anyonic_state_topo(state.ptr, &direct));

  std::ostringstream os;
  if (opt.format == "json") {
    json doc;
    json table = json::array();
    for (size_t k = 0; k < ps.size(); ++k) table.push_back({{"p", ps[k]}, {"c_topo", values[k]}});
    doc["table"] = table;
    doc["extrapolated"] = extrapolated;
    doc["direct"] = direct;
    os << doc.dump(2) << "\n";
  } else {
    os << "p,c_topo\n";
    for (size_t k = 0; k < ps.size(); ++k) os << fmt12(ps[k]) << "," << fmt12(values[k]) << "\n";
    os << "extrapolated," << fmt12(extrapolated) << "\n";
    os << "direct," << fmt12(direct) << "\n";
  }
  emit(opt, os.str());
  return 0;
}

int cmd_example_fib_pure(const Options& opt) {
  if (opt.q < 0.0) {
    std::cerr << "error: example-fib-pure needs --q\n";
    return 2;
  }
  double closed = 0.0;
  check(anyonic_fib_pure_topo(opt.q, &closed));
  StateHandle state;
  check(anyonic_state_fib_pure(opt.q, &state.ptr));
  double pipeline = 0.0;
  check(anyonic_state_topo(state.ptr, &pipeline));

  ModelHandle fib;
  check(anyonic_model_builtin("fibonacci", &fib.ptr));
  double total = 0.0;
  check(anyonic_model_total_qdim(fib.ptr, &total));
  const double qstar = 1.0 / (total * total);

  std::vector<std::string> notes;
  if (std::abs(opt.q - qstar) < 1e-3)
    notes.push_back("q = 1/D^2: the correlation attains its maximum 2 log2 D = " +
                    fmt12(2.0 * std::log2(total)));
  emit(opt, scalar_report(opt,
                          {{"q", fmt12(opt.q)},
                           {"c_topo_closed_form", fmt12(closed)},
                           {"c_topo_pipeline", fmt12(pipeline)}},
                          notes));
  return 0;
}

int cmd_example_fib4(const Options& opt) {
  if (opt.p_csv.empty()) {
    std::cerr << "error: example-fib4 needs --p P1,P2,P3,P4,P5\n";
    return 2;
  }
  const std::array<double, 5> p = parse_p(opt.p_csv);
  double closed = 0.0;
  check(anyonic_fib4_topo(p.data(), &closed));
  StateHandle state;
  check(anyonic_state_fib4(p.data(), &state.ptr));
  double pipeline = 0.0;
  check(anyonic_state_topo(state.ptr, &pipeline));

  ModelHandle fib;
  check(anyonic_model_builtin("fibonacci", &fib.ptr));
  double d_tau = 0.0;
  check(anyonic_model_qdim(fib.ptr, 1, &d_tau));

  std::vector<std::string> notes;
  if (std::abs(p[3] - p[4] / d_tau) < 1e-9)
    notes.push_back("p4 = p5/d: the correlation attains its minimum 0");
  emit(opt, scalar_report(opt,
                          {{"p", opt.p_csv},
                           {"c_topo_closed_form", fmt12(closed)},
                           {"c_topo_pipeline", fmt12(pipeline)}},
                          notes));
  return 0;
}

int cmd_sweep(const Options& opt) {
  if (opt.sweep_spec.empty()) {
    std::cerr << "error: sweep needs --sweep VAR:LO:HI:STEP\n";
    return 2;
  }
  std::string var;
  double lo = 0.0, hi = 0.0, step = 0.0;
  {
    std::stringstream ss(opt.sweep_spec);
    std::string item;
    std::vector<std::string> parts;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4) {
      std::cerr << "error: --sweep expects VAR:LO:HI:STEP\n";
      return 2;
    }
    var = parts[0];
    try {
      lo = std::stod(parts[1]);
      hi = std::stod(parts[2]);
      step = std::stod(parts[3]);
    } catch (const std::exception&) {
      std::cerr << "error: bad --sweep bounds\n";
      return 2;
    }
  }
  if (var != "q" && var != "ratio") {
    std::cerr << "error: sweep variable must be q or ratio\n";
    return 2;
  }
  if (step <= 0.0 || hi < lo) {
    std::cerr << "error: empty sweep range\n";
    return 2;
  }

  std::array<double, 5> base{0.2, 0.2, 0.2, 0.2, 0.2};
  if (!opt.p_csv.empty()) base = parse_p(opt.p_csv);

  std::ostringstream os;
  os << "param,entropy_rho,entropy_inferred,c_topo,c_ace\n";
  const long rows = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (long row = 0; row < rows; ++row) {
    const double v = lo + row * step;
    StateHandle state;
    if (var == "q") {
      check(anyonic_state_fib_pure(v, &state.ptr));
    } else {
      // ratio r = p4/p5, redistributing the combined base mass of p4+p5.
      const double mass = base[3] + base[4];
      std::array<double, 5> p = base;
      p[3] = mass * v / (1.0 + v);
      p[4] = mass / (1.0 + v);
      check(anyonic_state_fib4(p.data(), &state.ptr));
    }
    StateHandle inferred;
    check(anyonic_state_infer(state.ptr, &inferred.ptr));
    double s_rho = 0.0, s_inf = 0.0, topo = 0.0, charge_ent = 0.0;
    check(anyonic_state_entropy(state.ptr, &s_rho));
    check(anyonic_state_entropy(inferred.ptr, &s_inf));
    check(anyonic_state_topo(state.ptr, &topo));
    check(anyonic_state_ace(state.ptr, &charge_ent));
    os << fmt12(v) << "," << fmt12(s_rho) << "," << fmt12(s_inf) << "," << fmt12(topo) << ","
       << fmt12(charge_ent) << "\n";
  }
  emit(opt, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anyonic: bipartite anyonic states, entropies and correlation measures"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", opt.out_path, "write output to this path instead of stdout");
  app.add_option("--seed", opt.seed, "seed for randomized extensions (reserved)");
  app.add_option("--tol", opt.tol, "validation tolerance");

  auto add_model_flags = [&](CLI::App* cmd) {
    cmd->add_option("--builtin", opt.builtin, "built-in model: fibonacci, ising or z<k>");
    cmd->add_option("--model", opt.model_path, "model description file");
  };
  auto add_state_flag = [&](CLI::App* cmd) {
    cmd->add_option("--state", opt.state_path, "state file");
  };

  CLI::App* info = app.add_subcommand("model-info", "charges, quantum dimensions, consistency");
  add_model_flags(info);
  CLI::App* validate = app.add_subcommand("validate", "validate a model or state file");
  add_model_flags(validate);
  add_state_flag(validate);
  CLI::App* entropy = app.add_subcommand("entropy", "anyonic von Neumann entropy of a state");
  add_model_flags(entropy);
  add_state_flag(entropy);
  CLI::App* measure = app.add_subcommand("measure", "joint sector-observable expectation table");
  add_model_flags(measure);
  add_state_flag(measure);
  CLI::App* infer = app.add_subcommand("infer", "max-entropy inferred state");
  add_model_flags(infer);
  add_state_flag(infer);
  CLI::App* topo = app.add_subcommand("topo", "topological correlation of a state");
  add_model_flags(topo);
  add_state_flag(topo);
  CLI::App* ace_cmd = app.add_subcommand("ace", "entropy of anyonic charge entanglement");
  add_model_flags(ace_cmd);
  add_state_flag(ace_cmd);
  CLI::App* limit = app.add_subcommand("limit-check", "maximal-rank limit of the correlation");
  add_model_flags(limit);
  add_state_flag(limit);
  CLI::App* exf = app.add_subcommand("example-fib-pure", "Fibonacci two-pair pure state");
  exf->add_option("--q", opt.q, "vacuum-pair weight in [0,1]");
  CLI::App* ex4 = app.add_subcommand("example-fib4", "Fibonacci two-pair mixture");
  ex4->add_option("--p", opt.p_csv, "five mixture weights P1,...,P5");
  CLI::App* sweep = app.add_subcommand("sweep", "CSV parameter sweep (q or ratio)");
  sweep->add_option("--sweep", opt.sweep_spec, "VAR:LO:HI:STEP with VAR = q or ratio");
  sweep->add_option("--p", opt.p_csv, "base weights for the ratio sweep");

  // Let --format/--out/--seed/--tol appear after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (info->parsed()) return cmd_model_info(opt);
  if (validate->parsed()) return cmd_validate(opt);
  if (entropy->parsed()) return cmd_scalar(opt, "entropy", anyonic_state_entropy);
  if (measure->parsed()) return cmd_measure(opt);
  if (infer->parsed()) return cmd_infer(opt);
  if (topo->parsed()) return cmd_scalar(opt, "c_topo", anyonic_state_topo);
  if (ace_cmd->parsed()) return cmd_scalar(opt, "c_ace", anyonic_state_ace);
  if (limit->parsed()) return cmd_limit_check(opt);
  if (exf->parsed()) return cmd_example_fib_pure(opt);
  if (ex4->parsed()) return cmd_example_fib4(opt);
  if (sweep->parsed()) return cmd_sweep(opt);
  return 2;
}
