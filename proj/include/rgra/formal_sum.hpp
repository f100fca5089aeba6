#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "rgra/canonical.hpp"

namespace rgra {

using Q = mpq_class;

// Finite Q-linear combination of canonical oriented ribbon graphs sharing one
// signature. Terms are kept sorted by encoding; zero coefficients and graphs
// with orientation-reversing automorphisms never appear.
class FormalSum {
public:
    FormalSum() = default;
    explicit FormalSum(const RibbonGraph& g, const Q& c = 1) { add(g, c); }

    void add(const RibbonGraph& g, const Q& c = 1);
    void add_key(const std::string& key, const Q& c);
    void add(const FormalSum& other, const Q& c = 1);

    FormalSum& operator+=(const FormalSum& o) { add(o, 1); return *this; }
    FormalSum& operator-=(const FormalSum& o) { add(o, -1); return *this; }
    FormalSum& operator*=(const Q& c);

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<std::string, Q>& terms() const { return terms_; }
    Q coefficient(const std::string& key) const;
    const std::optional<Signature>& signature() const { return sig_; }

    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

private:
    void check(const std::string& key);
    std::map<std::string, Q> terms_;
    std::optional<Signature> sig_;
};

FormalSum operator+(FormalSum a, const FormalSum& b);
FormalSum operator-(FormalSum a, const FormalSum& b);
FormalSum operator*(const Q& c, FormalSum a);

}  // namespace rgra
