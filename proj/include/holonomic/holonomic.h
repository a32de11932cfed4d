#ifndef HOLONOMIC_H
#define HOLONOMIC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HOLO_OK = 0,
  HOLO_ERR_INVALID = 1,
  HOLO_ERR_PARSE = 2,
  HOLO_ERR_DENOMINATOR = 3,
  HOLO_ERR_DOMAIN = 4,
  HOLO_ERR_INTERNAL = 5
} holo_status;

typedef enum {
  HOLO_ALG_AUTO = -1,
  HOLO_ALG_NAIVE = 0,
  HOLO_ALG_BINSPLIT_EXACT = 1,
  HOLO_ALG_MULTIPOINT = 2,
  HOLO_ALG_RECT_PS = 3,
  HOLO_ALG_RECT_SPLIT = 4,
  HOLO_ALG_RECT_SPLIT_TAYLOR = 5,
  HOLO_ALG_RECT_DELTA = 6
} holo_algorithm;

typedef enum { HOLO_GAMMA_STIRLING = 0, HOLO_GAMMA_1F1 = 1 } holo_gamma_method;

typedef struct holo_ball holo_ball;
typedef struct holo_spec holo_spec;
typedef struct holo_result holo_result;

/* Zero or negative fields mean "choose automatically". */
typedef struct {
  holo_algorithm algorithm;
  uint64_t m;
  uint64_t subproduct;
  long guard_bits; /* -1: automatic */
  uint64_t stirling_shift;
} holo_plan;

typedef struct {
  uint64_t nonscalar;
  uint64_t scalar;
  uint64_t additions;
  uint64_t coeff_ops;
  uint64_t peak_coeffs;
} holo_counters;

void holo_plan_init(holo_plan* plan);

/* Message for the last failing call on this thread ("" if none). */
const char* holo_last_error(void);
/* Line of the last HOLO_ERR_PARSE and index of the last HOLO_ERR_DENOMINATOR. */
int holo_last_error_line(void);
uint64_t holo_last_error_index(void);

const char* holo_algorithm_name(holo_algorithm alg);
holo_status holo_algorithm_from_name(const char* name, holo_algorithm* out);

/* Balls.  Text is "q", "m +/- r" or "m ± r" with rational or decimal parts. */
holo_status holo_ball_from_string(const char* text, long prec_bits, holo_ball** out);
holo_ball* holo_ball_clone(const holo_ball* b);
void holo_ball_free(holo_ball* b);
/* Caller frees with holo_string_free. */
char* holo_ball_to_string(const holo_ball* b, int digits);
long holo_ball_accuracy_bits(const holo_ball* b, long cap);
/* 1 if the rational `q` lies in the ball, 0 if not, -1 if q does not parse. */
int holo_ball_contains_rational(const holo_ball* b, const char* q);
/* 1 if `inner` is a subset of `outer`. */
int holo_ball_contains_ball(const holo_ball* outer, const holo_ball* inner);
int holo_ball_overlaps(const holo_ball* a, const holo_ball* b);
double holo_ball_mid_double(const holo_ball* b);
void holo_string_free(char* s);

/* Recurrence spec files. */
holo_status holo_spec_parse(const char* text, holo_spec** out, int* err_line);
holo_status holo_spec_serialize(const holo_spec* spec, char** out);
size_t holo_spec_order(const holo_spec* spec);
/* 1 if the two specs describe the same matrix, denominator and initial values. */
int holo_spec_equal(const holo_spec* a, const holo_spec* b);
void holo_spec_free(holo_spec* spec);

/* Components of P(z, n) v0 / Q(z, n), v0 from the spec's init lines. */
holo_status holo_eval(const holo_spec* spec, const holo_ball* z, uint64_t n, long prec_bits, const holo_plan* plan,
                      holo_result** out);
/* As holo_eval with z given as an exact rational ("a/b" or a decimal);
   HOLO_ERR_PARSE if the text is not one.  Every algorithm, including
   binsplit-exact, then sees the exact value. */
holo_status holo_eval_rational(const holo_spec* spec, const char* z, uint64_t n, long prec_bits,
                               const holo_plan* plan, holo_result** out);
/* z (z+1) ... (z+n-1) as a one-component result. */
holo_status holo_rising(const holo_ball* z, uint64_t n, long prec_bits, const holo_plan* plan, holo_result** out);
/* Gamma(x) as a one-component result. */
holo_status holo_gamma(const holo_ball* x, long prec_bits, holo_gamma_method method, const holo_plan* plan,
                       holo_result** out);

size_t holo_result_size(const holo_result* r);
const holo_ball* holo_result_component(const holo_result* r, size_t i);
long holo_result_accuracy_bits(const holo_result* r);
holo_algorithm holo_result_algorithm(const holo_result* r);
uint64_t holo_result_m(const holo_result* r);
holo_counters holo_result_counters(const holo_result* r);
void holo_result_free(holo_result* r);

uint64_t holo_choose_m(holo_algorithm alg, uint64_t n, long prec_bits);

/* Process-wide Bernoulli number cache. */
void holo_bernoulli_cache_clear(void);
size_t holo_bernoulli_cache_size(void);
holo_status holo_bernoulli_cache_load(const char* path);
holo_status holo_bernoulli_cache_save(const char* path);

#ifdef __cplusplus
}
#endif

#endif
