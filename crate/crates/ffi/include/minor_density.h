/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef MINOR_DENSITY_H
#define MINOR_DENSITY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MdMembership {
  MD_MEMBERSHIP_IN_B = 0,
  MD_MEMBERSHIP_NOT_IN_B = 1,
  /*
   Above 2 and a documented member.
   */
  MD_MEMBERSHIP_KNOWN_ABOVE2 = 2,
  /*
   Above 2 and not decided.
   */
  MD_MEMBERSHIP_UNDECIDED = 3,
} MdMembership;

typedef enum MdPlantClass {
  MD_PLANT_CLASS_NOT_PLANT = 0,
  MD_PLANT_CLASS_PLANT_EQ = 1,
  MD_PLANT_CLASS_PLANT_PLUS = 2,
} MdPlantClass;

typedef enum MdStatus {
  MD_STATUS_OK = 0,
  MD_STATUS_NULL = 1,
  MD_STATUS_PARSE = 2,
  MD_STATUS_DOMAIN = 3,
  MD_STATUS_CAPACITY = 4,
  MD_STATUS_BUDGET = 5,
  MD_STATUS_OVERFLOW = 6,
  MD_STATUS_PANIC = 7,
} MdStatus;

/*
 Opaque graph handle.
 */
typedef struct MdGraph MdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or an empty string.
 Valid until the next call on the same thread.
 */
const char *md_last_error(void);

/*
 Parses one graph6 line.

 # Safety
 `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum MdStatus md_graph_from_graph6(const char *text, struct MdGraph **out);

/*
 Builds a family member from a spec such as `gkm:2,3` or `bowtie-star:2`.

 # Safety
 `spec` must be a NUL-terminated string and `out` a writable pointer.
 */
enum MdStatus md_graph_from_family(const char *spec, struct MdGraph **out);

/*
 # Safety
 `g` must come from this library and not be freed twice. Null is ignored.
 */
void md_graph_free(struct MdGraph *g);

/*
 Vertex count, or 0 for a null handle.

 # Safety
 `g` must be null or a live handle.
 */
size_t md_graph_order(const struct MdGraph *g);

/*
 Edge count, or 0 for a null handle.

 # Safety
 `g` must be null or a live handle.
 */
size_t md_graph_size(const struct MdGraph *g);

/*
 graph6 text for `g`; release it with `md_string_free`.

 # Safety
 `g` must be a live handle and `out` a writable pointer.
 */
enum MdStatus md_graph_to_graph6(const struct MdGraph *g, char **out);

/*
 # Safety
 `s` must come from this library and not be freed twice. Null is ignored.
 */
void md_string_free(char *s);

/*
 Edges per vertex.

 # Safety
 `g` must be a live handle; `num` and `den` writable pointers.
 */
enum MdStatus md_density(const struct MdGraph *g, int64_t *num, int64_t *den);

/*
 `(e - C(t,2)) / (v - t)`, or 0 when `e <= C(t,2)`.

 # Safety
 `g` must be a live handle; `num` and `den` writable pointers.
 */
enum MdStatus md_t_density(const struct MdGraph *g, size_t t, int64_t *num, int64_t *den);

/*
 Balance verdict. A negative `t` compares plain densities; otherwise
 `t`-densities. `budget` 0 means the default.

 # Safety
 `g` must be a live handle and `verdict` a writable pointer.
 */
enum MdStatus md_balance_check(const struct MdGraph *g,
                               int32_t t,
                               bool strict,
                               uint64_t budget,
                               bool *verdict);

/*
 # Safety
 `g` must be a live handle and `class` a writable pointer.
 */
enum MdStatus md_plant_classify(const struct MdGraph *g, enum MdPlantClass *class_);

/*
 Is `num/den` a critical density?

 # Safety
 `out` must be a writable pointer.
 */
enum MdStatus md_catalog_membership(int64_t num, int64_t den, enum MdMembership *out);

/*
 Least catalog value above `num/den` (up to 2).

 # Safety
 `out_num` and `out_den` must be writable pointers.
 */
enum MdStatus md_catalog_next_above(int64_t num, int64_t den, int64_t *out_num, int64_t *out_den);

/*
 Witness graph for a catalog value.

 # Safety
 `out` must be a writable pointer.
 */
enum MdStatus md_catalog_witness(int64_t num, int64_t den, struct MdGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINOR_DENSITY_H */
