/* C interface to the Schubert-calculus-of-lines engine.
 *
 * Conventions:
 *   - every function returns a schub_status; outputs are written through
 *     out-parameters only on SCHUB_OK
 *   - strings returned through char** are heap-allocated JSON documents;
 *     release them with schub_string_free
 *   - on failure, schub_last_error() returns a message for the calling
 *     thread
 *   - fields are written "Q" or "Fp:<prime>"
 */
#ifndef SCHUBERT_H
#define SCHUBERT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum schub_status {
  SCHUB_OK = 0,
  SCHUB_ERROR_DOMAIN = 1, /* violated precondition / inconsistent input */
  SCHUB_ERROR_PARSE = 2,  /* malformed JSON or field syntax */
  SCHUB_ERROR_INTERNAL = 3
} schub_status;

const char* schub_version(void);
const char* schub_last_error(void);
void schub_string_free(char* s);

/* ---- tableau calculus ---- */

/* tableau_json: {"rows":[[1,2,3],[4]]} or the bare rows array */
schub_status schub_tableau_star(const char* tableau_json, int alpha, char** out_json);
/* cap <= 0 means no cap */
schub_status schub_tableau_multistar(const int* alphas, int count, int cap, char** out_json);
schub_status schub_tableau_count(const int* lambda, int lambda_len, const int* alphas, int count,
                                 long long* out_value);

/* ---- tableau algebra ---- */

schub_status schub_plactic_circ(const char* left_json, const char* right_json, char** out_json);
/* skew_json: {"outer":[...],"inner":[...],"rows":[[null,...,1],[2],...]} */
schub_status schub_plactic_rectify(const char* skew_json, char** out_json);
schub_status schub_plactic_lr(const int* lambda, int nl, const int* mu, int nm, const int* nu,
                              int nn, long long* out_value);

/* ---- Chow ring of lines in P^n ---- */

/* classes_json: [[a,b],...]; result: {"(a,b)": coeff, ...} */
schub_status schub_chow_product(int n, const char* classes_json, char** out_json);
schub_status schub_chow_number(int n, const char* classes_json, long long* out_value);

/* ---- arrangements ---- */

typedef struct schub_arrangement schub_arrangement;

schub_status schub_arrangement_build(int n, const char* field, uint64_t seed,
                                     schub_arrangement** out);
schub_status schub_arrangement_parse(const char* json, schub_arrangement** out);
schub_status schub_arrangement_json(const schub_arrangement* a, char** out_json);
schub_status schub_arrangement_verify(const schub_arrangement* a, char** report_json);
void schub_arrangement_free(schub_arrangement* a);
/* {"value": bound} for the guaranteed-success field size */
schub_status schub_arrangement_bound(int n, char** out_json);
/* builds a seeded flag and hyperplane, then checks every pencil section and
 * limit; trials = number of rational parameters (ignored over F_p) */
schub_status schub_pencil_check(int n, const char* field, uint64_t seed, int trials,
                                char** report_json);

/* ---- brute force over finite fields ---- */

schub_status schub_ff_line_count(int n, long long q, char** out_json);
/* problem_json: {"n":..,"field":..,"conditions":[{"K":rows,"M":rows},..]} */
schub_status schub_ff_solve(const char* problem_json, int threads, char** report_json);
/* points_json/roots_json: [[a,b],...] with string or integer entries; NULL
 * picks the canonical defaults. brute_force != 0 runs the full line scan. */
schub_status schub_ff_segre(int n, const char* field, const char* points_json, int brute_force,
                            int threads, char** report_json);
schub_status schub_ff_scroll(int n, const char* field, const char* roots_json,
                             char** report_json);
/* which: "lemma24" | "lemma23" | "lemma52"; params_json carries
 * n, q, seed and, for lemma52, prefix, s, alpha, negative_control */
schub_status schub_ff_check(const char* which, const char* params_json, char** report_json);

/* ---- acceptance matrix ---- */

schub_status schub_accept(int threads, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SCHUBERT_H */
