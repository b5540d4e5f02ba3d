#ifndef AGGSEM_TRUTH_HPP
#define AGGSEM_TRUTH_HPP

namespace aggsem {

//! Three truth values. Truth order f < u < t; precision order u <p t, u <p f.
enum class TruthValue { False, Undefined, True };

inline char const *to_string(TruthValue v) {
    switch (v) {
    case TruthValue::False: return "f";
    case TruthValue::Undefined: return "u";
    case TruthValue::True: return "t";
    }
    return "?";
}

//! a ≤p b.
inline bool leq_precision(TruthValue a, TruthValue b) { return a == TruthValue::Undefined || a == b; }

inline TruthValue truth_min(TruthValue a, TruthValue b) { return static_cast<int>(a) < static_cast<int>(b) ? a : b; }
inline TruthValue truth_max(TruthValue a, TruthValue b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

inline TruthValue negate(TruthValue v) {
    switch (v) {
    case TruthValue::False: return TruthValue::True;
    case TruthValue::True: return TruthValue::False;
    default: return TruthValue::Undefined;
    }
}

} // namespace aggsem

#endif
