#ifndef LDT_H
#define LDT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes.
typedef enum LdtStatus {
  LDT_STATUS_OK = 0,
  LDT_STATUS_NULL_POINTER = 1,
  LDT_STATUS_INVALID_UTF8 = 2,
  // Malformed graph or group text.
  LDT_STATUS_PARSE = 3,
  // A precondition of the analysis does not hold (not automorphisms, not
  // in F(s), not case (c), ...).
  LDT_STATUS_CONTRACT = 4,
  // An enumeration or search cap was exceeded.
  LDT_STATUS_CAP_EXCEEDED = 5,
  // A panic or failed internal consistency check.
  LDT_STATUS_INTERNAL = 6,
} LdtStatus;

// Opaque graph handle.
typedef struct LdtGraph LdtGraph;

// Opaque permutation-group handle.
typedef struct LdtGroup LdtGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a graph file (text `n m` + edges, or JSON) into `*out`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum LdtStatus ldt_graph_parse(const char *text, struct LdtGraph **out);

// Builds a graph on `n` vertices from `edge_count` pairs stored
// consecutively in `edges` (`2 * edge_count` entries).
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (it may be null
// when `edge_count` is 0); `out` must be writable.
enum LdtStatus ldt_graph_from_edges(size_t n,
                                    const size_t *edges,
                                    size_t edge_count,
                                    struct LdtGraph **out);

// Number of vertices of a graph.
//
// # Safety
// `graph` must be a live handle; `out` must be writable.
enum LdtStatus ldt_graph_vertex_count(const struct LdtGraph *graph, size_t *out);

// Releases a graph handle; null is ignored.
//
// # Safety
// `graph` must come from this library and not be used afterwards.
void ldt_graph_free(struct LdtGraph *graph);

// Parses a group file (one generator per line, cycle or image notation).
// `degree` 0 means "infer from the file".
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum LdtStatus ldt_group_parse(const char *text, size_t degree, struct LdtGroup **out);

// The full automorphism group of a graph with at most `bound` vertices
// (0 selects the library default).
//
// # Safety
// `graph` must be a live handle; `out` must be writable.
enum LdtStatus ldt_group_automorphisms(const struct LdtGraph *graph,
                                       size_t bound,
                                       struct LdtGroup **out);

// The order of a group; `CapExceeded` if it does not fit in 64 bits.
//
// # Safety
// `group` must be a live handle; `out` must be writable.
enum LdtStatus ldt_group_order(const struct LdtGroup *group, uint64_t *out);

// Releases a group handle; null is ignored.
//
// # Safety
// `group` must come from this library and not be used afterwards.
void ldt_group_free(struct LdtGroup *group);

// Membership in F(s): writes the verdict and `s' = min(s, diam)`.
// `s_effective` may be null.
//
// # Safety
// Handles must be live; `member` must be writable.
enum LdtStatus ldt_fs_membership(const struct LdtGraph *graph,
                                 const struct LdtGroup *group,
                                 size_t s,
                                 bool *member,
                                 size_t *s_effective);

// The classification report as JSON.
//
// # Safety
// Handles must be live; `out` must be writable.
enum LdtStatus ldt_classify_json(const struct LdtGraph *graph,
                                 const struct LdtGroup *group,
                                 size_t s,
                                 char **out);

// The reduction chain of a case (c) pair as JSON.
//
// # Safety
// Handles must be live; `out` must be writable.
enum LdtStatus ldt_reduce_json(const struct LdtGraph *graph,
                               const struct LdtGroup *group,
                               size_t s,
                               char **out);

// The type of a basic pair as JSON.
//
// # Safety
// Handles must be live; `out` must be writable.
enum LdtStatus ldt_basic_type_json(const struct LdtGraph *graph,
                                   const struct LdtGroup *group,
                                   size_t s,
                                   char **out);

// Regularity verdict, arrays, identity checks and duals as JSON.
//
// # Safety
// `graph` must be live; `out` must be writable.
enum LdtStatus ldt_arrays_json(const struct LdtGraph *graph, size_t s, char **out);

// Releases a string returned by this library; null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void ldt_string_free(char *s);

// The message for the last failure on this thread, or null. The pointer
// stays valid until the next library call on the same thread.
const char *ldt_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LDT_H */
