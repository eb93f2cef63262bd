#pragma once

#include <memory>
#include <string>

#include "streamlang/diagnostics.hpp"

namespace streamlang {

// Channel-count patterns: 0 | S(a) | * | variable. A pattern is "fixed" when
// it is built from Zero/Succ alone. Variables carry a constraint deciding
// whether they may ever stand for a Star-containing arity.
enum class ArityTag { Zero, Succ, Star, Var };

enum class ArityConstraint {
    AnyArity,   // renders as '*a
    FixedArity  // renders as '#a; may never contain Star
};

struct Arity;
using ArityPtr = std::shared_ptr<const Arity>;

struct Arity {
    ArityTag tag;
    ArityPtr inner;          // Succ payload
    int var_id = -1;         // Var payload
    ArityConstraint constraint = ArityConstraint::AnyArity;

    static ArityPtr zero() {
        static ArityPtr z = std::make_shared<Arity>(Arity{ArityTag::Zero, nullptr, -1, {}});
        return z;
    }
    static ArityPtr star() {
        static ArityPtr s = std::make_shared<Arity>(Arity{ArityTag::Star, nullptr, -1, {}});
        return s;
    }
    static ArityPtr succ(ArityPtr a) {
        return std::make_shared<Arity>(Arity{ArityTag::Succ, std::move(a), -1, {}});
    }
    static ArityPtr var(int id, ArityConstraint c) {
        return std::make_shared<Arity>(Arity{ArityTag::Var, nullptr, id, c});
    }
    static ArityPtr of(int n) {
        ArityPtr a = zero();
        for (int i = 0; i < n; ++i) a = succ(a);
        return a;
    }
};

// Succ-nesting depth; bounded to keep unification and oracles total.
inline constexpr int kMaxArityDepth = 16;

inline int arity_depth(const ArityPtr& a) {
    int d = 0;
    const Arity* p = a.get();
    while (p->tag == ArityTag::Succ) {
        ++d;
        p = p->inner.get();
    }
    return d;
}

inline bool arity_is_ground(const ArityPtr& a) {
    const Arity* p = a.get();
    while (p->tag == ArityTag::Succ) p = p->inner.get();
    return p->tag != ArityTag::Var;
}

inline bool arity_is_fixed(const ArityPtr& a) {
    const Arity* p = a.get();
    while (p->tag == ArityTag::Succ) p = p->inner.get();
    return p->tag == ArityTag::Zero;
}

// Channel count of a fixed arity.
inline int arity_to_int(const ArityPtr& a) {
    int n = 0;
    const Arity* p = a.get();
    while (p->tag == ArityTag::Succ) {
        ++n;
        p = p->inner.get();
    }
    if (p->tag != ArityTag::Zero)
        fail(errc::runtime, "arity is not a fixed channel count");
    return n;
}

inline bool arity_equal(const ArityPtr& a, const ArityPtr& b) {
    if (a->tag != b->tag) return false;
    switch (a->tag) {
        case ArityTag::Zero:
        case ArityTag::Star: return true;
        case ArityTag::Succ: return arity_equal(a->inner, b->inner);
        case ArityTag::Var: return a->var_id == b->var_id;
    }
    return false;
}

// The five derivation rules on ground arities:
//   0 <: 0      S(A) <: S(A') if A <: A'      * <: *      0 <: *
//   S(A) <: * if A <: *
inline bool arity_subtype(const ArityPtr& left, const ArityPtr& right) {
    switch (right->tag) {
        case ArityTag::Zero:
            return left->tag == ArityTag::Zero;
        case ArityTag::Succ:
            return left->tag == ArityTag::Succ && arity_subtype(left->inner, right->inner);
        case ArityTag::Star:
            if (left->tag == ArityTag::Star || left->tag == ArityTag::Zero) return true;
            if (left->tag == ArityTag::Succ) return arity_subtype(left->inner, right);
            return false;
        case ArityTag::Var:
            fail(errc::type, "arity_subtype requires ground arities");
    }
    return false;
}

struct Kind {
    ArityPtr audio, video, midi;

    static Kind of(int a, int v, int m) {
        return Kind{Arity::of(a), Arity::of(v), Arity::of(m)};
    }
};

inline bool kind_is_ground(const Kind& k) {
    return arity_is_ground(k.audio) && arity_is_ground(k.video) && arity_is_ground(k.midi);
}

inline bool kind_is_fixed(const Kind& k) {
    return arity_is_fixed(k.audio) && arity_is_fixed(k.video) && arity_is_fixed(k.midi);
}

// Componentwise over (audio, video, midi).
inline bool kind_subtype(const Kind& left, const Kind& right) {
    return arity_subtype(left.audio, right.audio) && arity_subtype(left.video, right.video) &&
           arity_subtype(left.midi, right.midi);
}

// Concrete channel counts for a prepared source; drives buffer allocation.
struct FixedKind {
    int audio = 0;
    int video = 0;
    int midi = 0;

    friend bool operator==(const FixedKind&, const FixedKind&) = default;

    std::string str() const {
        return "(" + std::to_string(audio) + "," + std::to_string(video) + "," +
               std::to_string(midi) + ")";
    }
};

inline FixedKind kind_to_fixed(const Kind& k) {
    return FixedKind{arity_to_int(k.audio), arity_to_int(k.video), arity_to_int(k.midi)};
}

}  // namespace streamlang
