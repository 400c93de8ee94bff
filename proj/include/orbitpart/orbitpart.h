#ifndef ORBITPART_ORBITPART_H
#define ORBITPART_ORBITPART_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(ORBITPART_BUILDING)
#    define OP_API __declspec(dllexport)
#  else
#    define OP_API __declspec(dllimport)
#  endif
#else
#  define OP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum op_status {
    OP_OK = 0,
    OP_ERR_INTERNAL = 1,
    OP_ERR_NOT_CONVERGED = 2,
    OP_ERR_INPUT = 3,
    OP_ERR_SIZE_GUARD = 4
} op_status;

typedef struct op_rep op_rep;
typedef struct op_points op_points;
typedef struct op_partition op_partition;

typedef struct op_solver_options {
    double tol;
    int restarts;
    int max_iter;
    uint64_t seed;
    int threads; /* 0: hardware concurrency */
} op_solver_options;

OP_API const char* op_version(void);

/* Message of the last failure on the calling thread ("" if none). */
OP_API const char* op_last_error(void);

/* Strings returned through char** out parameters are owned by the caller. */
OP_API void op_string_free(char* s);

OP_API void op_solver_options_default(op_solver_options* opts);

OP_API op_status op_catalog_list_json(char** out);

/* A catalog key such as "cyclic:4", or a path to a representation JSON file. */
OP_API op_status op_rep_create(const char* key, op_rep** out);
OP_API void op_rep_free(op_rep* rep);
OP_API op_status op_rep_info(const op_rep* rep, int* order, int* dim, int* required_points);
OP_API op_status op_rep_to_json(const op_rep* rep, char** out);

/* count = 0 draws the required number of points for rep. */
OP_API op_status op_points_generate(const op_rep* rep, uint64_t seed, int count, op_points** out);
OP_API op_status op_points_read(const char* path, op_points** out);
OP_API op_status op_points_to_csv(const op_points* points, char** out);
OP_API op_status op_points_info(const op_points* points, int* count, int* dim);
OP_API void op_points_free(op_points* points);

/* Returns OP_ERR_NOT_CONVERGED with *out still set when pivoting fails. */
OP_API op_status op_partition_compute(const op_rep* rep, const op_points* points, const op_solver_options* opts,
                                      op_partition** out);
OP_API op_status op_partition_read(const op_rep* rep, const char* path, op_partition** out);
OP_API op_status op_partition_to_json(const op_rep* rep, const op_partition* partition, char** out);
OP_API void op_partition_free(op_partition* partition);

/* *passed is set to 1 when every check holds. */
OP_API op_status op_verify_json(const op_rep* rep, const op_points* points, const op_partition* partition, double tol,
                                char** out, int* passed);

OP_API op_status op_oracle_json(const op_rep* rep, const op_points* points, int below_threshold,
                                const op_solver_options* opts, char** out);

OP_API op_status op_symmetry_json(const op_rep* rep, const double* u, int len, double quantization, char** out);

OP_API op_status op_irreducibility_json(const op_rep* rep, char** out);

/* projection: three 0-based coordinate indices, or NULL. *format receives
   a static string "svg" or "obj". */
OP_API op_status op_render(const op_points* points, const op_partition* partition, const int* projection, char** out,
                           const char** format);

#ifdef __cplusplus
}
#endif

#endif
