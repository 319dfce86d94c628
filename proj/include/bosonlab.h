/* Copyright 2026 Bosonlab Contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the bosonlab shared library: truncated two-mode Fock-space
 * simulation of entanglement generation at linear and nonlinear two-mode
 * devices. All entry points return a bl_status; on failure a human-readable
 * message is available from bl_last_error() (thread local). Handles are
 * opaque and freed with the matching *_free call. Complex numbers cross the
 * boundary as interleaved (re, im) double pairs; structured inputs (states,
 * devices, search configs) cross as JSON text.
 */

#ifndef BOSONLAB_H
#define BOSONLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bl_status {
  BL_OK = 0,
  BL_ERR_INVALID = 2,    /* bad arguments, unparsable JSON, precondition */
  BL_ERR_TRUNCATION = 3, /* Fock cutoff leakage above the allowed budget */
  BL_ERR_VERIFY = 4,     /* verification suite failure */
  BL_ERR_INTERNAL = 5
} bl_status;

typedef struct bl_state bl_state;     /* single-mode state */
typedef struct bl_twomode bl_twomode; /* two-mode state, mode-a-major */

/* Message for the most recent failure on this thread; never NULL. */
const char* bl_last_error(void);

void bl_state_free(bl_state* s);
void bl_twomode_free(bl_twomode* s);
void bl_string_free(char* s);

/* States ------------------------------------------------------------- */

/* JSON: {"type":"coherent","alpha":[re,im],"cutoff":30} and the families
 * "fock" (n), "squeezed_vacuum" (r, phi), "higher_cat" (alpha, n,
 * relative_phases), "generalized_kl" (k, l, eta, seed). "cutoff" is optional
 * everywhere; when omitted it is chosen per family. A raw amplitude array of
 * [re,im] pairs (the bl_state_to_json format) is also accepted and is
 * normalized on input. */
bl_status bl_state_from_json(const char* json_text, bl_state** out);

/* dim amplitudes as 2*dim doubles (re, im interleaved); normalized copy. */
bl_status bl_state_from_amplitudes(const double* re_im, int dim, bl_state** out);

int bl_state_dim(const bl_state* s);
bl_status bl_state_amplitudes(const bl_state* s, double* re_im_out);
bl_status bl_state_mean_photon(const bl_state* s, double* out);
bl_status bl_state_to_json(const bl_state* s, char** json_out);

/* Two-mode states and devices ---------------------------------------- */

bl_status bl_tensor(const bl_state* a, const bl_state* b, bl_twomode** out);
int bl_twomode_dim_a(const bl_twomode* s);
int bl_twomode_dim_b(const bl_twomode* s);
bl_status bl_twomode_amplitudes(const bl_twomode* s, double* re_im_out);

/* JSON: {"type":"beam_splitter","theta":..,"phi":..,"psi":..},
 * {"type":"two_mode_squeezer","r":..,"psi":..},
 * {"type":"general_bilinear","m":..,"n":..,"r":..,"psi":..,"dagger_a":..}. */
bl_status bl_evolve(const bl_twomode* in, const char* device_json, bl_twomode** out,
                    double* leaked_weight);

/* Max deviation of the evolved ladder operators from the device's SU(2)
 * matrix, over the truncation interior (beam splitters only). */
bl_status bl_heisenberg_check(const char* device_json, int cutoff_a, int cutoff_b, double* out);

/* Entanglement -------------------------------------------------------- */

bl_status bl_linear_entropy(const bl_twomode* s, double* out);

/* Second-order predicted linear entropy for the product of a and b. */
bl_status bl_predict_entropy(const bl_state* a, const bl_state* b, const char* device_json,
                             double* out);

/* f_max = g_max = (N/2)(N/2+1), h_max/theta^2 = N(N/2+1). */
bl_status bl_extremal_values(double N, double* f_max, double* g_max, double* h_max_over_theta_sq);

/* Moment diagnostics --------------------------------------------------- */

/* out[0..4] = lhs, rhs, gap, relative_gap, saturated (0/1). */
bl_status bl_check_cat_inequality(const bl_state* s, int n, double out[5]);
bl_status bl_check_squeeze_inequality(const bl_state* s, int k, int l, double out[5]);

/* Relative residual of a^k|s> = eta a^dag^l|s>. */
bl_status bl_eigen_residual(const bl_state* s, int k, int l, double eta_re, double eta_im,
                            double* out);

/* Least-squares eta for the residual above. */
bl_status bl_fit_eta(const bl_state* s, int k, int l, double* eta_re, double* eta_im);

/* Wigner function ------------------------------------------------------ */

/* Row-major nx*np values (x rows); coverage_warning set to 1 when the grid
 * looks too small for the state's support. threads >= 1. */
bl_status bl_wigner(const bl_state* s, double x_min, double x_max, int nx, double p_min,
                    double p_max, int np, int threads, double* values_out,
                    int* coverage_warning);

bl_status bl_wigner_point(const bl_state* s, double x, double p, double* out);

/* Independent quadrature-integral evaluation, for cross-checks. */
bl_status bl_wigner_point_quadrature(const bl_state* s, double x, double p, double* out);

/* Max grid deviation under an exact phase-space rotation by 2*pi/n. */
bl_status bl_symmetry_scan(const bl_state* s, int n, double* out);

/* Extremal search ------------------------------------------------------ */

/* config JSON: {"N":..,"cutoff":..,"device":{..},"restarts":..,
 * "max_iters":..,"step_tolerance":..,"seed":..}. maximize: 1 to maximize the
 * predictor, 0 to minimize. Result JSON includes best_value, best_state_a/b
 * amplitude arrays, constraint_violation, iterations_used, converged. */
bl_status bl_search(const char* config_json, int maximize, char** result_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BOSONLAB_H */
