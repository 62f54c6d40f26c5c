#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tetra {

/// Exact rational scalar. Always kept canonical (lowest terms, positive
/// denominator); gmp maintains this as long as operands are canonical.
using Rat = mpq_class;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" or "p". Throws InputError on malformed input.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    try {
        Rat q(s);
        if (q.get_den() == 0) throw InputError("zero denominator in: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: " + s);
    }
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace tetra
