#include "gstab/c_api.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "gstab/graph_register.hpp"
#include "gstab/tableau.hpp"
#include "gstab/version.hpp"

struct gstab_register {
    gstab::GraphRegister reg;
};

namespace {

thread_local std::string last_error;

template <typename F>
int guarded(gstab_register *handle, F &&f) {
    if (!handle) {
        last_error = "null register handle";
        return -1;
    }
    try {
        f(handle->reg);
        last_error.clear();
        return 0;
    } catch (const std::exception &e) {
        last_error = e.what();
        return -1;
    }
}

}  // namespace

extern "C" {

const char *gstab_version(void) { return gstab::kVersion; }

const char *gstab_last_error(void) { return last_error.c_str(); }

gstab_register *gstab_register_new(size_t n, uint64_t seed) {
    try {
        auto *handle = new gstab_register{gstab::GraphRegister(n, seed)};
        last_error.clear();
        return handle;
    } catch (const std::exception &e) {
        last_error = e.what();
        return nullptr;
    }
}

void gstab_register_free(gstab_register *reg) { delete reg; }

int gstab_hadamard(gstab_register *reg, size_t q) {
    return guarded(reg, [&](auto &r) { r.hadamard(q); });
}
int gstab_s(gstab_register *reg, size_t q) {
    return guarded(reg, [&](auto &r) { r.s_gate(q); });
}
int gstab_s_dagger(gstab_register *reg, size_t q) {
    return guarded(reg, [&](auto &r) { r.s_dagger(q); });
}
int gstab_x(gstab_register *reg, size_t q) {
    return guarded(reg, [&](auto &r) { r.x(q); });
}
int gstab_y(gstab_register *reg, size_t q) {
    return guarded(reg, [&](auto &r) { r.y(q); });
}
int gstab_z(gstab_register *reg, size_t q) {
    return guarded(reg, [&](auto &r) { r.z(q); });
}
int gstab_cphase(gstab_register *reg, size_t a, size_t b) {
    return guarded(reg, [&](auto &r) { r.cphase(a, b); });
}
int gstab_cnot(gstab_register *reg, size_t control, size_t target) {
    return guarded(reg, [&](auto &r) { r.cnot(control, target); });
}

int gstab_measure(gstab_register *reg, size_t q, int forced, int *outcome, int *deterministic) {
    if (forced < -1 || forced > 1) {
        last_error = "forced must be -1, 0 or 1";
        return -1;
    }
    return guarded(reg, [&](auto &r) {
        const auto record = r.measure(q, forced < 0 ? std::nullopt : std::optional<bool>(forced == 1));
        if (outcome) {
            *outcome = record.outcome ? 1 : 0;
        }
        if (deterministic) {
            *deterministic = record.deterministic ? 1 : 0;
        }
    });
}

long gstab_print_stabilizer(const gstab_register *reg, char *buf, size_t len) {
    if (!reg) {
        last_error = "null register handle";
        return -1;
    }
    try {
        const std::string text = gstab::canonicalize(gstab::tableau_from_graphreg(reg->reg)).to_text();
        if (buf && len > 0) {
            const size_t copied = std::min(len - 1, text.size());
            std::memcpy(buf, text.data(), copied);
            buf[copied] = '\0';
        }
        last_error.clear();
        return static_cast<long>(text.size());
    } catch (const std::exception &e) {
        last_error = e.what();
        return -1;
    }
}

}  // extern "C"
