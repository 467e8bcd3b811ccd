#ifndef JPN_AFFINE_HPP
#define JPN_AFFINE_HPP

// Degree-<=1 expressions in named unknowns over Rat.
//
// AffineForm is the coefficient type used when an algebra's structure
// constants contain symbolic unknowns (complement coefficients to be
// determined).  Products of two non-constant forms are a logic error in
// every derivation we perform -- the radical squares to zero before any
// two unknowns can meet -- so multiplication guards against it and throws
// QuadraticTermError instead of silently producing a wrong linear system.

#include "rational.hpp"

#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace jpn {

struct UnknownId {
    std::string family;     // "eta", "alpha", "beta", "gamma", "lam", ...
    std::vector<int> sub;   // subscript indices, 1-based
    std::vector<int> sup;   // superscript indices (used by lam unknowns)

    auto operator<=>(const UnknownId&) const = default;

    std::string name() const {
        std::ostringstream os;
        os << family;
        if (!sup.empty()) {
            os << '^';
            for (int i : sup) os << i;
        }
        if (!sub.empty()) {
            os << '_';
            for (int i : sub) os << i;
        }
        return os.str();
    }
};

struct QuadraticTermError : std::runtime_error {
    QuadraticTermError(const std::string& a, const std::string& b)
        : std::runtime_error("product of unknowns: " + a + " * " + b) {}
};

class AffineForm {
public:
    AffineForm() = default;
    AffineForm(const Rat& c) : const_(c) {}
    AffineForm(long c) : const_(c) {}
    explicit AffineForm(const UnknownId& u) { lin_[u] = 1; }

    static AffineForm unknown(UnknownId u) { return AffineForm(u); }

    const Rat& constant() const { return const_; }
    const std::map<UnknownId, Rat>& linear() const { return lin_; }
    bool is_constant() const { return lin_.empty(); }
    bool is_zero() const { return const_ == 0 && lin_.empty(); }

    Rat coeff(const UnknownId& u) const {
        auto it = lin_.find(u);
        return it == lin_.end() ? Rat(0) : it->second;
    }

    AffineForm& operator+=(const AffineForm& o) {
        const_ += o.const_;
        for (auto& [u, c] : o.lin_) add_lin(u, c);
        return *this;
    }
    AffineForm& operator-=(const AffineForm& o) {
        const_ -= o.const_;
        for (auto& [u, c] : o.lin_) add_lin(u, -c);
        return *this;
    }
    AffineForm& operator*=(const AffineForm& o) {
        if (!lin_.empty() && !o.lin_.empty())
            throw QuadraticTermError(lin_.begin()->first.name(),
                                     o.lin_.begin()->first.name());
        if (lin_.empty()) {
            Rat c = const_;
            const_ = c * o.const_;
            for (auto& [u, k] : o.lin_)
                if (c != 0) lin_[u] = c * k;
        } else {
            const Rat& c = o.const_;
            const_ *= c;
            if (c == 0) lin_.clear();
            else for (auto& [u, k] : lin_) k *= c;
        }
        return *this;
    }

    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
    friend AffineForm operator*(AffineForm a, const AffineForm& b) { return a *= b; }
    friend AffineForm operator-(const AffineForm& a) { return AffineForm() - a; }
    friend bool operator==(const AffineForm& a, const AffineForm& b) {
        return a.const_ == b.const_ && a.lin_ == b.lin_;
    }

    // Replace unknowns by numeric values; unknowns missing from `vals` stay.
    AffineForm substitute(const std::map<UnknownId, Rat>& vals) const {
        AffineForm r(const_);
        for (auto& [u, c] : lin_) {
            auto it = vals.find(u);
            if (it == vals.end()) r.add_lin(u, c);
            else r.const_ += c * it->second;
        }
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        if (const_ != 0) { os << rat_to_string(const_); first = false; }
        for (auto& [u, c] : lin_) {
            if (!first && c > 0) os << "+";
            if (c == -1) os << "-";
            else if (c != 1) os << rat_to_string(c) << "*";
            os << u.name();
            first = false;
        }
        return os.str();
    }

private:
    void add_lin(const UnknownId& u, const Rat& c) {
        auto it = lin_.find(u);
        if (it == lin_.end()) { if (c != 0) lin_[u] = c; return; }
        it->second += c;
        if (it->second == 0) lin_.erase(it);
    }

    Rat const_{0};
    std::map<UnknownId, Rat> lin_;
};

} // namespace jpn

#endif
