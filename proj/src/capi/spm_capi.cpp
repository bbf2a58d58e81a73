#include "spm/spm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "spm/error.hpp"
#include "spm/jacobian.hpp"
#include "spm/number_theory.hpp"
#include "spm/json_io.hpp"

struct spm_quiver {
  spm::WeightedQuiver q;
};

struct spm_species {
  spm::SpeciesWithPotential sp;
};

namespace {

thread_local std::string last_error;

template <class F>
spm_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return SPM_OK;
  } catch (const spm::Error& e) {
    last_error = e.what();
    return static_cast<spm_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SPM_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw spm::Error(spm::ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const spm::Json& j) {
  if (out != nullptr) *out = copy_string(j.dump());
}

std::size_t to_index(std::size_t vertex, std::size_t n) {
  if (vertex < 1 || vertex > n) {
    throw spm::Error(spm::ErrorCode::unknown_vertex, "vertex " + std::to_string(vertex) + " out of range");
  }
  return vertex - 1;
}

std::vector<std::size_t> to_sequence(const std::size_t* seq, std::size_t len, std::size_t n) {
  if (len > 0) require(seq, "sequence");
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < len; ++s) out.push_back(to_index(seq[s], n));
  return out;
}

spm::SearchOptions to_options(const spm_search_options* options) {
  spm::SearchOptions out;
  if (options == nullptr) return out;
  out.budget = options->budget;
  out.max_r = options->max_r;
  out.seed = options->seed;
  out.truncation = options->truncation;
  if (options->maxlen != 0) out.maxlen = options->maxlen;
  out.threads = options->threads;
  return out;
}

}  // namespace

extern "C" {

const char* spm_version(void) { return "0.1.0"; }

const char* spm_status_name(spm_status status) {
  if (status == SPM_OK) return "ok";
  return spm::error_code_name(static_cast<spm::ErrorCode>(status));
}

const char* spm_last_error(void) { return last_error.c_str(); }

void spm_free_string(char* s) { std::free(s); }

spm_status spm_quiver_from_json(const char* json, spm_quiver** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    const spm::Json j = spm::parse_json(json);
    spm::WeightedQuiver q = spm::document_kind(j) == spm::DocumentKind::matrix
                                ? spm::matrix_to_quiver(spm::matrix_from_json(j))
                                : spm::quiver_from_json(j.contains("quiver") ? j.at("quiver") : j);
    *out = new spm_quiver{std::move(q)};
  });
}

spm_quiver* spm_quiver_clone(const spm_quiver* q) {
  if (q == nullptr) return nullptr;
  try {
    return new spm_quiver(*q);
  } catch (...) {
    last_error = "out of memory";
    return nullptr;
  }
}

void spm_quiver_free(spm_quiver* q) { delete q; }

size_t spm_quiver_vertex_count(const spm_quiver* q) { return q == nullptr ? 0 : q->q.size(); }

size_t spm_quiver_arrow_count(const spm_quiver* q) { return q == nullptr ? 0 : q->q.arrows().size(); }

spm_status spm_quiver_multiplicity(const spm_quiver* q, size_t i, size_t j, size_t* out) {
  return guard([&] {
    require(q, "quiver");
    require(out, "out");
    *out = q->q.multiplicity(to_index(i, q->q.size()), to_index(j, q->q.size()));
  });
}

int spm_quiver_is_2_acyclic(const spm_quiver* q) { return q != nullptr && spm::is_2_acyclic(q->q) ? 1 : 0; }

spm_status spm_quiver_default_prime(const spm_quiver* q, uint32_t* out) {
  return guard([&] {
    require(q, "quiver");
    require(out, "out");
    *out = static_cast<uint32_t>(spm::smallest_admissible_prime(spm::lcm_of(q->q.weights())));
  });
}

spm_status spm_quiver_mutate(spm_quiver* q, size_t vertex) {
  return guard([&] {
    require(q, "quiver");
    q->q = spm::mutate_quiver(q->q, to_index(vertex, q->q.size()));
  });
}

spm_status spm_quiver_to_json(const spm_quiver* q, char** out) {
  return guard([&] {
    require(q, "quiver");
    require(out, "out");
    emit(out, spm::quiver_json(q->q));
  });
}

spm_status spm_quiver_matrix_json(const spm_quiver* q, char** out) {
  return guard([&] {
    require(q, "quiver");
    require(out, "out");
    emit(out, spm::matrix_json(spm::quiver_to_matrix(q->q)));
  });
}

spm_status spm_matrix_mutate(const char* matrix_json, const size_t* seq, size_t len, char** out) {
  return guard([&] {
    require(matrix_json, "json");
    require(out, "out");
    spm::ExchangeMatrix b = spm::matrix_from_json(spm::parse_json(matrix_json));
    for (std::size_t k : to_sequence(seq, len, b.size())) b = spm::mutate_matrix(b, k);
    emit(out, spm::matrix_json(b));
  });
}

spm_status spm_species_from_json(const char* json, spm_species** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new spm_species{spm::sp_from_json(spm::parse_json(json))};
  });
}

spm_status spm_species_from_quiver(const spm_quiver* q, uint32_t p, unsigned truncation, spm_species** out) {
  return guard([&] {
    require(q, "quiver");
    require(out, "out");
    auto species = spm::make_species(spm::FieldTower::build(p, q->q.weights()), q->q);
    *out = new spm_species{spm::SpeciesWithPotential(species, truncation == 0 ? spm::kDefaultTruncation : truncation)};
  });
}

spm_species* spm_species_clone(const spm_species* s) {
  if (s == nullptr) return nullptr;
  try {
    return new spm_species(*s);
  } catch (...) {
    last_error = "out of memory";
    return nullptr;
  }
}

void spm_species_free(spm_species* s) { delete s; }

spm_status spm_species_to_json(const spm_species* s, char** out) {
  return guard([&] {
    require(s, "species");
    require(out, "out");
    emit(out, spm::sp_json(s->sp));
  });
}

spm_status spm_species_quiver(const spm_species* s, spm_quiver** out) {
  return guard([&] {
    require(s, "species");
    require(out, "out");
    *out = new spm_quiver{s->sp.quiver()};
  });
}

spm_status spm_species_set_potential(spm_species* s, const char* potential_json) {
  return guard([&] {
    require(s, "species");
    require(potential_json, "json");
    s->sp = spm::SpeciesWithPotential(s->sp.species,
                                      spm::potential_from_json(s->sp.species, spm::parse_json(potential_json)));
  });
}

spm_status spm_species_premutate(spm_species* s, size_t vertex) {
  return guard([&] {
    require(s, "species");
    s->sp = spm::premutate_sp(s->sp, to_index(vertex, s->sp.quiver().size()));
  });
}

spm_status spm_species_reduce(spm_species* s, char** report_json) {
  return guard([&] {
    require(s, "species");
    auto [next, report] = spm::reduce_sp(s->sp);
    emit(report_json, spm::report_json(report));
    s->sp = std::move(next);
  });
}

spm_status spm_species_mutate(spm_species* s, size_t vertex, char** report_json) {
  return guard([&] {
    require(s, "species");
    auto [next, report] = spm::mutate_sp(s->sp, to_index(vertex, s->sp.quiver().size()));
    emit(report_json, spm::report_json(report));
    s->sp = std::move(next);
  });
}

spm_status spm_species_nondegenerate(const spm_species* s, const size_t* seq, size_t len, int* out,
                                     char** trace_json) {
  return guard([&] {
    require(s, "species");
    require(out, "out");
    const spm::NondegeneracyTrace trace =
        spm::is_nondegenerate_along(s->sp, to_sequence(seq, len, s->sp.quiver().size()));
    emit(trace_json, spm::trace_json(trace));
    *out = trace.nondegenerate ? 1 : 0;
  });
}

spm_status spm_species_jacobian_dim(const spm_species* s, unsigned truncation, size_t* dimension,
                                    int* stabilized) {
  return guard([&] {
    require(s, "species");
    require(dimension, "dimension");
    const spm::JacobianDimension dim = spm::jacobian_quotient_dim(s->sp.potential, truncation);
    *dimension = dim.dimension;
    if (stabilized != nullptr) *stabilized = dim.stabilized ? 1 : 0;
  });
}

void spm_search_options_init(spm_search_options* options) {
  if (options == nullptr) return;
  const spm::SearchOptions defaults;
  options->budget = defaults.budget;
  options->max_r = defaults.max_r;
  options->seed = defaults.seed;
  options->truncation = defaults.truncation;
  options->maxlen = 0;
  options->threads = defaults.threads;
}

spm_status spm_search(const spm_quiver* q, uint32_t p, const size_t* seq, size_t len,
                      const spm_search_options* options, int* found, spm_species** witness, char** result_json) {
  return guard([&] {
    require(q, "quiver");
    require(found, "found");
    const spm::SearchResult result =
        spm::search_nondegenerate(q->q, p, to_sequence(seq, len, q->q.size()), to_options(options));
    emit(result_json, spm::search_json(result));
    *found = result.witness ? 1 : 0;
    if (witness != nullptr) *witness = result.witness ? new spm_species{result.witness->state} : nullptr;
  });
}

spm_status spm_compatibility_report(const char* matrix_json, const size_t* seq, size_t len, uint32_t p,
                                    const char* potential_json, int search, const spm_search_options* options,
                                    char** report_json) {
  return guard([&] {
    require(matrix_json, "json");
    require(report_json, "out");
    const spm::ExchangeMatrix b = spm::matrix_from_json(spm::parse_json(matrix_json));
    spm::CompatibilityOptions opts;
    opts.search = search != 0;
    opts.search_options = to_options(options);
    if (potential_json != nullptr) {
      const spm::WeightedQuiver q = spm::matrix_to_quiver(b);
      auto species = spm::make_species(spm::FieldTower::build(p, q.weights()), q);
      opts.potential = spm::potential_from_json(species, spm::parse_json(potential_json));
    }
    emit(report_json, spm::compatibility_json(spm::compatibility_report(b, to_sequence(seq, len, b.size()), p, opts)));
  });
}

}  // extern "C"
