/* C-compatible surface over GraphRegister, meant for foreign-language
 * bindings. Handles are opaque; every call returning int yields 0 on success
 * and -1 on failure, with the message available from gstab_last_error(). */
#ifndef GSTAB_C_API_H
#define GSTAB_C_API_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gstab_register gstab_register;

const char *gstab_version(void);

/* Message of the last failed call on this thread; empty if none. */
const char *gstab_last_error(void);

/* Returns NULL on failure (e.g. n == 0). */
gstab_register *gstab_register_new(size_t n, uint64_t seed);
void gstab_register_free(gstab_register *reg);

int gstab_hadamard(gstab_register *reg, size_t q);
int gstab_s(gstab_register *reg, size_t q);
int gstab_s_dagger(gstab_register *reg, size_t q);
int gstab_x(gstab_register *reg, size_t q);
int gstab_y(gstab_register *reg, size_t q);
int gstab_z(gstab_register *reg, size_t q);
int gstab_cphase(gstab_register *reg, size_t a, size_t b);
int gstab_cnot(gstab_register *reg, size_t control, size_t target);

/* forced: -1 for a random outcome, 0 or 1 to override it. On success the
 * outcome is stored in *outcome and, when deterministic is non-NULL, the
 * determinism flag in *deterministic. */
int gstab_measure(gstab_register *reg, size_t q, int forced, int *outcome, int *deterministic);

/* Writes the canonical stabilizer tableau (one `+ZZXI` line per
 * generator) into buf, NUL-terminated and truncated to len. Returns the
 * full text length excluding the terminator, or -1 on failure. */
long gstab_print_stabilizer(const gstab_register *reg, char *buf, size_t len);

#ifdef __cplusplus
}
#endif

#endif
