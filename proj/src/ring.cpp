#include "pfglm/ring.hpp"

#include "pfglm/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace pfglm {

namespace {

constexpr std::size_t kCachedPowers = 512;

struct Registry {
    std::mutex mutex;
    std::map<mpz_class, std::unique_ptr<Ring>> rings;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

Ring::Ring(mpz_class p) : p_(std::move(p)) {
    powers_.reserve(kCachedPowers);
    powers_.emplace_back(1);
    for (std::size_t k = 1; k < kCachedPowers; ++k) powers_.push_back(powers_.back() * p_);
}

const Ring& Ring::of(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw InvalidPrime("not a prime: " + p.get_str());
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto it = reg.rings.find(p);
    if (it == reg.rings.end()) {
        // Ring's constructor is private, so no make_unique.
        it = reg.rings.emplace(p, std::unique_ptr<Ring>(new Ring(p))).first;
    }
    return *it->second;
}

mpz_class Ring::pow(Prec k) const {
    if (k < static_cast<Prec>(powers_.size())) return powers_[static_cast<std::size_t>(k)];
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace pfglm
