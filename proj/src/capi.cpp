#include "anyonic/anyonic.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "inference.hpp"
#include "model_io.hpp"

struct anyonic_model {
  std::shared_ptr<const anyonic::AnyonModel> model;
};

struct anyonic_state {
  anyonic::AnyonicDensityOperator rho;
  anyonic_model model_view;
};

struct anyonic_record {
  anyonic::MeasurementRecord record;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return ANYONIC_OK;
  } catch (const anyonic::ParseError& e) {
    set_error(e.what());
    return ANYONIC_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    set_error(e.what());
    return ANYONIC_ERR_PARSE;
  } catch (const anyonic::ModelError& e) {
    set_error(e.what());
    return ANYONIC_ERR_MODEL_INVALID;
  } catch (const anyonic::StateError& e) {
    set_error(e.what());
    return ANYONIC_ERR_STATE_INVALID;
  } catch (const anyonic::ConvergenceError& e) {
    set_error(e.what());
    return ANYONIC_ERR_NO_CONVERGENCE;
  } catch (const anyonic::DomainError& e) {
    set_error(e.what());
    return ANYONIC_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ANYONIC_ERR_INTERNAL;
  }
}

int require(bool condition, const char* message) {
  if (condition) return ANYONIC_OK;
  set_error(message);
  return ANYONIC_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

anyonic_state* wrap_state(anyonic::AnyonicDensityOperator rho) {
  auto model = rho.basis().basis_a().model_ptr();
  return new anyonic_state{std::move(rho), anyonic_model{std::move(model)}};
}

std::vector<anyonic::Charge> parse_leaves(const anyonic::AnyonModel& model, const char* csv) {
  std::vector<anyonic::Charge> leaves;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) leaves.push_back(model.charge(item));
  }
  if (leaves.empty()) throw anyonic::DomainError("empty leaf list");
  return leaves;
}

}  // namespace

extern "C" {

const char* anyonic_version(void) { return "0.1.0"; }

const char* anyonic_status_name(int status) {
  switch (status) {
    case ANYONIC_OK: return "ok";
    case ANYONIC_ERR_ARGUMENT: return "argument";
    case ANYONIC_ERR_PARSE: return "parse";
    case ANYONIC_ERR_MODEL_INVALID: return "model-invalid";
    case ANYONIC_ERR_STATE_INVALID: return "state-invalid";
    case ANYONIC_ERR_NO_CONVERGENCE: return "no-convergence";
    case ANYONIC_ERR_INTERNAL: return "internal";
    default: return "unknown";
  }
}

const char* anyonic_last_error(void) { return g_last_error.c_str(); }

void anyonic_string_free(char* s) { delete[] s; }

int anyonic_model_builtin(const char* name, anyonic_model** out) {
  if (int rc = require(name && out, "null argument")) return rc;
  return guarded([&] { *out = new anyonic_model{anyonic::builtin_model(name)}; });
}

int anyonic_model_load(const char* path, anyonic_model** out) {
  if (int rc = require(path && out, "null argument")) return rc;
  return guarded([&] { *out = new anyonic_model{anyonic::load_model_file(path)}; });
}

int anyonic_model_parse(const char* json_text, anyonic_model** out) {
  if (int rc = require(json_text && out, "null argument")) return rc;
  return guarded([&] {
    *out = new anyonic_model{anyonic::parse_model(nlohmann::json::parse(json_text))};
  });
}

void anyonic_model_free(anyonic_model* model) { delete model; }

const char* anyonic_model_name(const anyonic_model* model) {
  return model ? model->model->name().c_str() : nullptr;
}

int anyonic_model_charge_count(const anyonic_model* model) {
  return model ? model->model->charge_count() : 0;
}

const char* anyonic_model_charge_label(const anyonic_model* model, int charge) {
  if (!model || charge < 0 || charge >= model->model->charge_count()) return nullptr;
  return model->model->label(anyonic::Charge(charge)).c_str();
}

int anyonic_model_charge_index(const anyonic_model* model, const char* label, int* out) {
  if (int rc = require(model && label && out, "null argument")) return rc;
  return guarded([&] { *out = model->model->charge(label).index(); });
}

int anyonic_model_fusion(const anyonic_model* model, int a, int b, int c, int* out) {
  if (int rc = require(model && out, "null argument")) return rc;
  return guarded([&] {
    *out = model->model->fusion_multiplicity(anyonic::Charge(a), anyonic::Charge(b),
                                             anyonic::Charge(c));
  });
}

int anyonic_model_qdim(const anyonic_model* model, int charge, double* out) {
  if (int rc = require(model && out, "null argument")) return rc;
  return guarded([&] { *out = model->model->qdim(anyonic::Charge(charge)); });
}

int anyonic_model_total_qdim(const anyonic_model* model, double* out) {
  if (int rc = require(model && out, "null argument")) return rc;
  return guarded([&] { *out = model->model->total_qdim(); });
}

int anyonic_model_f_symbol(const anyonic_model* model, int a, int b, int ap, int bp, int c,
                           int g, double* re, double* im) {
  if (int rc = require(model && re && im, "null argument")) return rc;
  return guarded([&] {
    const anyonic::Complex v =
        model->model->f_symbol(anyonic::Charge(a), anyonic::Charge(b), anyonic::Charge(ap),
                               anyonic::Charge(bp), anyonic::Charge(c), anyonic::Charge(g));
    *re = v.real();
    *im = v.imag();
  });
}

int anyonic_model_verify(const anyonic_model* model, double tol, int* pass,
                         double* max_residual, char** report) {
  if (int rc = require(model != nullptr, "null argument")) return rc;
  return guarded([&] {
    const anyonic::ValidationReport r = model->model->verify(tol > 0 ? tol : 1e-10);
    if (pass) *pass = r.pass() ? 1 : 0;
    if (max_residual) *max_residual = r.max_residual();
    if (report) *report = copy_string(r.to_string());
  });
}

int anyonic_state_load(const char* path, const anyonic_model* model, anyonic_state** out) {
  if (int rc = require(path && out, "null argument")) return rc;
  return guarded([&] {
    *out = wrap_state(anyonic::load_state_file(path, model ? model->model : nullptr));
  });
}

int anyonic_state_parse(const char* json_text, const anyonic_model* model,
                        anyonic_state** out) {
  if (int rc = require(json_text && out, "null argument")) return rc;
  return guarded([&] {
    *out = wrap_state(anyonic::parse_state(nlohmann::json::parse(json_text),
                                           model ? model->model : nullptr));
  });
}

int anyonic_state_dump(const anyonic_state* state, char** json_out) {
  if (int rc = require(state && json_out, "null argument")) return rc;
  return guarded([&] { *json_out = copy_string(anyonic::state_to_json(state->rho).dump(2)); });
}

void anyonic_state_free(anyonic_state* state) { delete state; }

const anyonic_model* anyonic_state_model(const anyonic_state* state) {
  return state ? &state->model_view : nullptr;
}

int anyonic_state_maximally_mixed(const anyonic_model* model, const char* leaves_a,
                                  const char* leaves_b, anyonic_state** out) {
  if (int rc = require(model && leaves_a && leaves_b && out, "null argument")) return rc;
  return guarded([&] {
    const auto basis =
        anyonic::bipartite_basis(model->model, parse_leaves(*model->model, leaves_a),
                                 parse_leaves(*model->model, leaves_b));
    *out = wrap_state(anyonic::maximally_mixed(basis));
  });
}

int anyonic_state_fib_pure(double q, anyonic_state** out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = wrap_state(anyonic::fib_pure_state(q)); });
}

int anyonic_state_fib4(const double p[5], anyonic_state** out) {
  if (int rc = require(p && out, "null argument")) return rc;
  return guarded([&] {
    *out = wrap_state(anyonic::fib4_state({p[0], p[1], p[2], p[3], p[4]}));
  });
}

int anyonic_state_basis_labels(const anyonic_state* state, char** out) {
  if (int rc = require(state && out, "null argument")) return rc;
  return guarded([&] {
    const anyonic::BipartiteBasis& basis = state->rho.basis();
    const anyonic::AnyonModel& m = basis.model();
    std::string text;
    for (const anyonic::Charge c : m.charges()) {
      const int dim = basis.block_dim(c);
      if (dim == 0) continue;
      text += "block@" + m.label(c) + " dim " + std::to_string(dim) + ": ";
      for (int k = 0; k < dim; ++k) {
        if (k) text += '|';
        text += basis.element_label(c, k);
      }
      text += '\n';
    }
    *out = copy_string(text);
  });
}

int anyonic_state_quantum_trace(const anyonic_state* state, double* out) {
  if (int rc = require(state && out, "null argument")) return rc;
  return guarded([&] { *out = anyonic::quantum_trace(state->rho); });
}

int anyonic_state_entropy(const anyonic_state* state, double* out) {
  if (int rc = require(state && out, "null argument")) return rc;
  return guarded([&] { *out = anyonic::anyonic_entropy(state->rho); });
}

int anyonic_state_topo(const anyonic_state* state, double* out) {
  if (int rc = require(state && out, "null argument")) return rc;
  return guarded([&] { *out = anyonic::topological_correlation(state->rho); });
}

int anyonic_state_ace(const anyonic_state* state, double* out) {
  if (int rc = require(state && out, "null argument")) return rc;
  return guarded([&] { *out = anyonic::ace(state->rho); });
}

int anyonic_state_is_maximal_rank(const anyonic_state* state, double tol, int* out) {
  if (int rc = require(state && out, "null argument")) return rc;
  return guarded([&] { *out = anyonic::is_maximal_rank(state->rho, tol) ? 1 : 0; });
}

int anyonic_state_mix(const anyonic_state* state, double p, anyonic_state** out) {
  if (int rc = require(state && out, "null argument")) return rc;
  return guarded([&] { *out = wrap_state(anyonic::mix(state->rho, p)); });
}

int anyonic_state_infer(const anyonic_state* state, anyonic_state** out) {
  if (int rc = require(state && out, "null argument")) return rc;
  return guarded([&] {
    *out = wrap_state(anyonic::embed(anyonic::sever(state->rho), state->rho.basis_ptr()));
  });
}

int anyonic_state_topo_limit(const anyonic_state* state, const double* ps, int count,
                             double* values, double* extrapolated) {
  if (int rc = require(state && ps && count > 0 && values && extrapolated, "null argument"))
    return rc;
  return guarded([&] {
    const anyonic::LimitResult r =
        anyonic::topo_correlation_via_limit(state->rho, std::span(ps, ps + count));
    for (int k = 0; k < count; ++k) values[k] = r.table[k].value;
    *extrapolated = r.extrapolated;
  });
}

int anyonic_state_measure(const anyonic_state* state, anyonic_record** out) {
  if (int rc = require(state && out, "null argument")) return rc;
  return guarded([&] {
    const anyonic::BipartiteBasis& basis = state->rho.basis();
    const anyonic::ObservableBasis obs_a(basis.basis_a_ptr());
    const anyonic::ObservableBasis obs_b(basis.basis_b_ptr());
    *out = new anyonic_record{anyonic::measure_all(state->rho, obs_a, obs_b)};
  });
}

int anyonic_record_count(const anyonic_record* record) {
  return record ? static_cast<int>(record->record.entries().size()) : 0;
}

int anyonic_record_entry(const anyonic_record* record, int index, int* a, int* i, int* b,
                         int* j, double* value) {
  if (int rc = require(record != nullptr, "null argument")) return rc;
  if (int rc = require(index >= 0 && index < anyonic_record_count(record),
                       "record index out of range"))
    return rc;
  const auto& e = record->record.entries()[static_cast<size_t>(index)];
  if (a) *a = e.a.index();
  if (i) *i = e.i;
  if (b) *b = e.b.index();
  if (j) *j = e.j;
  if (value) *value = e.value;
  return ANYONIC_OK;
}

void anyonic_record_free(anyonic_record* record) { delete record; }

int anyonic_binary_entropy(double q, double* out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = anyonic::binary_entropy(q); });
}

int anyonic_fib_pure_topo(double q, double* out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = anyonic::fib_pure_topo(q); });
}

int anyonic_fib4_topo(const double p[5], double* out) {
  if (int rc = require(p && out, "null argument")) return rc;
  return guarded([&] { *out = anyonic::fib4_topo({p[0], p[1], p[2], p[3], p[4]}); });
}

}  // extern "C"
