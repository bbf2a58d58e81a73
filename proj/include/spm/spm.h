/*
 * C interface to the mutation library. Objects are opaque handles owned by
 * the caller; every fallible call returns an spm_status and leaves a
 * message retrievable with spm_last_error() on the calling thread.
 * Vertices and mutation sequences are 1-based throughout.
 * Strings returned through char** are heap copies released with
 * spm_free_string().
 */
#ifndef SPM_SPM_H
#define SPM_SPM_H

#include <stddef.h>
#include <stdint.h>

#if defined(SPM_BUILDING_LIBRARY)
#define SPM_API __attribute__((visibility("default")))
#else
#define SPM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spm_status {
  SPM_OK = 0,
  SPM_ERR_INVALID_ARGUMENT = 1,
  SPM_ERR_NOT_PRIME,
  SPM_ERR_INADMISSIBLE_PRIME,
  SPM_ERR_NO_ADMISSIBLE_CONSTANT,
  SPM_ERR_NOT_COPRIME,
  SPM_ERR_IRREDUCIBILITY,
  SPM_ERR_UNKNOWN_VERTEX,
  SPM_ERR_UNKNOWN_ARROW,
  SPM_ERR_MALFORMED_MATRIX,
  SPM_ERR_NOT_TWO_ACYCLIC,
  SPM_ERR_NOT_STRONGLY_PRIMITIVE,
  SPM_ERR_SPECIES_MISMATCH,
  SPM_ERR_NOT_IN_SUBFIELD,
  SPM_ERR_VERTEX_MISMATCH,
  SPM_ERR_DIVISION_BY_ZERO,
  SPM_ERR_INVALID_SUBSTITUTION,
  SPM_ERR_NOT_CYCLIC,
  SPM_ERR_PARSE,
  SPM_ERR_INTERNAL
} spm_status;

typedef struct spm_quiver spm_quiver;
typedef struct spm_species spm_species;

typedef struct spm_search_options {
  size_t budget;
  unsigned max_r;
  uint64_t seed;
  unsigned truncation;
  unsigned maxlen; /* 0: longest chordless cycle, capped at truncation - 2 */
  unsigned threads; /* 0: hardware concurrency */
} spm_search_options;

SPM_API const char* spm_version(void);
/* Stable snake_case name of a status, e.g. "not_two_acyclic". */
SPM_API const char* spm_status_name(spm_status status);
SPM_API const char* spm_last_error(void);
SPM_API void spm_free_string(char* s);

/* Accepts a matrix document {n, d, rows} or a quiver document {weights, arrows}. */
SPM_API spm_status spm_quiver_from_json(const char* json, spm_quiver** out);
SPM_API spm_quiver* spm_quiver_clone(const spm_quiver* q);
SPM_API void spm_quiver_free(spm_quiver* q);
SPM_API size_t spm_quiver_vertex_count(const spm_quiver* q);
SPM_API size_t spm_quiver_arrow_count(const spm_quiver* q);
/* Number of arrows j -> i. */
SPM_API spm_status spm_quiver_multiplicity(const spm_quiver* q, size_t i, size_t j, size_t* out);
SPM_API int spm_quiver_is_2_acyclic(const spm_quiver* q);
/* Smallest odd prime p with p = 1 mod lcm(weights). */
SPM_API spm_status spm_quiver_default_prime(const spm_quiver* q, uint32_t* out);
SPM_API spm_status spm_quiver_mutate(spm_quiver* q, size_t vertex);
SPM_API spm_status spm_quiver_to_json(const spm_quiver* q, char** out);
SPM_API spm_status spm_quiver_matrix_json(const spm_quiver* q, char** out);

/* Mutates a matrix document along seq and returns the resulting document. */
SPM_API spm_status spm_matrix_mutate(const char* matrix_json, const size_t* seq, size_t len, char** out);

/* Accepts a species-with-potential document {tower, quiver, potential}. */
SPM_API spm_status spm_species_from_json(const char* json, spm_species** out);
/* Species of q over the canonical tower for p, with the zero potential. */
SPM_API spm_status spm_species_from_quiver(const spm_quiver* q, uint32_t p, unsigned truncation,
                                           spm_species** out);
SPM_API spm_species* spm_species_clone(const spm_species* s);
SPM_API void spm_species_free(spm_species* s);
SPM_API spm_status spm_species_to_json(const spm_species* s, char** out);
SPM_API spm_status spm_species_quiver(const spm_species* s, spm_quiver** out);
SPM_API spm_status spm_species_set_potential(spm_species* s, const char* potential_json);
SPM_API spm_status spm_species_premutate(spm_species* s, size_t vertex);
/* report_json may be NULL. */
SPM_API spm_status spm_species_reduce(spm_species* s, char** report_json);
SPM_API spm_status spm_species_mutate(spm_species* s, size_t vertex, char** report_json);
SPM_API spm_status spm_species_nondegenerate(const spm_species* s, const size_t* seq, size_t len, int* out,
                                             char** trace_json);
SPM_API spm_status spm_species_jacobian_dim(const spm_species* s, unsigned truncation, size_t* dimension,
                                            int* stabilized);

SPM_API void spm_search_options_init(spm_search_options* options);
/* On success *found tells whether a witness exists; witness and result_json may be NULL. */
SPM_API spm_status spm_search(const spm_quiver* q, uint32_t p, const size_t* seq, size_t len,
                              const spm_search_options* options, int* found, spm_species** witness,
                              char** result_json);

/* potential_json may be NULL; search != 0 then looks for a potential along seq. */
SPM_API spm_status spm_compatibility_report(const char* matrix_json, const size_t* seq, size_t len, uint32_t p,
                                            const char* potential_json, int search,
                                            const spm_search_options* options, char** report_json);

#ifdef __cplusplus
}
#endif

#endif
