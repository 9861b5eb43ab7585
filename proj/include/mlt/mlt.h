/* mlt - matroidal latin square transversal toolkit, C interface.
 *
 * Objects live behind opaque handles with create/free pairs. Calls return
 * mlt_status; on failure mlt_last_error() holds a thread-local message
 * describing what went wrong. Strings handed out as char** are owned by
 * the caller and released with mlt_string_free().
 *
 * All indices are 0-based: grid cells, element ids, subset indices.
 */
#ifndef MLT_H
#define MLT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mlt_status {
  MLT_OK = 0,
  MLT_ERR_INPUT = 1,      /* malformed file, bad parameter, unknown id */
  MLT_ERR_VALIDATION = 2, /* a grid line is not a base */
  MLT_ERR_ANOMALY = 3,    /* a proven bound was breached, or a guaranteed
                             exchange failed its re-check */
  MLT_ERR_CONTRACT = 4,   /* a documented precondition was broken */
  MLT_ERR_DOMAIN = 5,     /* request outside the operation's domain */
  MLT_ERR_INTERNAL = 6
} mlt_status;

typedef struct mlt_mls mlt_mls;
typedef struct mlt_report mlt_report;
typedef struct mlt_scan_report mlt_scan_report;
typedef struct mlt_family mlt_family;

const char* mlt_version(void);

/* Message for the most recent failing call on this thread. */
const char* mlt_last_error(void);

void mlt_string_free(char* s);

/* ---- instance construction and io ------------------------------------ */

/* The exclusion grid of degree n over GF(p): one shared element on the
 * diagonal, one fresh difference element per off-diagonal cell. */
mlt_status mlt_gen_theorem2(int n, unsigned long long p, mlt_mls** out);

/* Partition-encoded random latin square, deterministic per (n, seed). */
mlt_status mlt_gen_latin(int n, unsigned long long seed, mlt_mls** out);

/* Random latin square pushed through a random invertible basis of GF(p)^n,
 * deterministic per (n, p, seed). */
mlt_status mlt_gen_embed(int n, unsigned long long p, unsigned long long seed,
                         mlt_mls** out);

mlt_status mlt_mls_from_json(const char* text, mlt_mls** out);
mlt_status mlt_mls_read_file(const char* path, mlt_mls** out);
mlt_status mlt_mls_to_json(const mlt_mls* m, char** out_text);
mlt_status mlt_mls_write_file(const mlt_mls* m, const char* path);
void mlt_mls_free(mlt_mls* m);

int mlt_mls_degree(const mlt_mls* m);
int mlt_mls_id_at(const mlt_mls* m, int row, int col);

/* MLT_OK when every row and column is a base, MLT_ERR_VALIDATION
 * otherwise. When violations_json is non-NULL it receives the full
 * verdict as JSON in both cases. */
mlt_status mlt_mls_validate(const mlt_mls* m, char** violations_json);

/* ---- solving ---------------------------------------------------------- */

/* method: "exact" (branch and bound, node_budget 0 = unbounded),
 *         "greedy" (seeded maximal scan),
 *         "augment" (greedy + exchange augmentation to ceil(2n/3); returns
 *         MLT_ERR_ANOMALY when an exhaustive search proves the floor
 *         unreachable).
 * The instance is validated first; MLT_ERR_VALIDATION on bad lines. */
mlt_status mlt_solve(const mlt_mls* m, const char* method,
                     unsigned long long node_budget, unsigned long long seed,
                     mlt_report** out);

const char* mlt_report_method(const mlt_report* r);
int mlt_report_size(const mlt_report* r);
int mlt_report_optimal(const mlt_report* r);
int mlt_report_anomaly(const mlt_report* r);
unsigned long long mlt_report_nodes(const mlt_report* r);
int mlt_report_cell_count(const mlt_report* r);
mlt_status mlt_report_cell(const mlt_report* r, int index, int* row, int* col);
mlt_status mlt_report_to_json(const mlt_report* r, char** out_text);
void mlt_report_free(mlt_report* r);

/* ---- scanning --------------------------------------------------------- */

/* generator: "latin", "theorem2", or "embed". count < 0 scans every latin
 * square of order n (n <= 5). Instances whose proven maximum falls below
 * n-1 are dumped into dump_dir (default ".") and re-verified from the
 * dumped file. */
mlt_status mlt_scan(const char* generator, int n, unsigned long long p,
                    long long count, unsigned long long seed,
                    unsigned long long node_budget, const char* dump_dir,
                    mlt_scan_report** out);

int mlt_scan_report_instance_count(const mlt_scan_report* r);
int mlt_scan_report_min_max(const mlt_scan_report* r);
int mlt_scan_report_candidate_count(const mlt_scan_report* r);
/* Candidates whose re-verified maximum falls below ceil(2n/3). */
int mlt_scan_report_floor_breaches(const mlt_scan_report* r);
mlt_status mlt_scan_report_instance(const mlt_scan_report* r, int index,
                                    int* exact_size, int* heuristic_size,
                                    int* optimal, int* anomaly);
mlt_status mlt_scan_report_to_json(const mlt_scan_report* r, char** out_text);
void mlt_scan_report_free(mlt_scan_report* r);

/* ---- set-family covering probe ---------------------------------------- */

/* text: {"x": [...], "subsets": [[...], ...]} */
mlt_status mlt_family_from_json(const char* text, mlt_family** out);
mlt_status mlt_family_decompose(const mlt_family* f, char** out_json);

/* Smallest index of a subset all of whose elements appear in other
 * subsets. Writes -1 when no subset qualifies (a legitimate outcome for
 * odd ground sets). Preconditions (more than |X|/2 subsets, each of size
 * >= the family size) are enforced with MLT_ERR_CONTRACT. */
mlt_status mlt_family_find_covered(const mlt_family* f, int* out_index);
void mlt_family_free(mlt_family* f);

#ifdef __cplusplus
}
#endif

#endif /* MLT_H */
