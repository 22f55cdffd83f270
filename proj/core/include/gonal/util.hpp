// Shared error types, assertion macro and the deterministic PRNG.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gonal {

// Input could not be parsed / violates the documented grammar.  CLI exit 3.
struct malformed_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is well-formed but fails a hypothesis gate (not simply branched,
// wrong characteristic, reducible, inconsistent invariants, ...).  CLI exit 2.
struct gate_rejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A model degenerated mid-pipeline (elimination defect, singular change of
// basis, ...).  Always carries a diagnostic; CLI exit 2 as well.
struct degenerate_model : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant violation.  Never expected on valid inputs.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

#define GONAL_CHECK(cond, msg)                                        \
    do {                                                              \
        if (!(cond)) throw ::gonal::internal_error(std::string(msg)); \
    } while (0)

// splitmix64: tiny, portable, identical output on every platform.
// All randomized routines take an explicit rng so runs are reproducible.
struct rng64 {
    uint64_t state;
    explicit rng64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % bound;
    }
};

}  // namespace gonal
