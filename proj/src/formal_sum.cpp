#include "rgra/formal_sum.hpp"

#include <stdexcept>

namespace rgra {

void FormalSum::check(const std::string& key) {
    Signature s = key_signature(key);
    if (!sig_) sig_ = s;
    else if (*sig_ != s)
        throw std::invalid_argument("FormalSum: mixed signatures " + sig_->str() + " vs " + s.str());
}

void FormalSum::add_key(const std::string& key, const Q& c) {
    if (c == 0) return;
    check(key);
    auto [it, fresh] = terms_.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void FormalSum::add(const RibbonGraph& g, const Q& c) {
    if (c == 0) return;
    CanonicalForm cf = canonicalize(g);
    if (cf.zero) {
        check(cf.key);
        return;
    }
    add_key(cf.key, cf.sign > 0 ? Q(c) : Q(-c));
}

void FormalSum::add(const FormalSum& other, const Q& c) {
    if (other.sig_ && !sig_) sig_ = other.sig_;
    for (const auto& [k, v] : other.terms_) add_key(k, v * c);
}

FormalSum& FormalSum::operator*=(const Q& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Q FormalSum::coefficient(const std::string& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Q(0) : it->second;
}

FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
FormalSum operator*(const Q& c, FormalSum a) { return a *= c; }

}  // namespace rgra
