#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "coneinf/polynomial.hpp"

namespace coneinf {

inline constexpr std::size_t kDefaultBudget = 200000;

// Polynomial ideal given by generators. Zero generators are dropped; an
// empty generator list denotes the zero ideal. Reduced Groebner bases are
// cached per monomial order behind a mutex, so concurrent readers see each
// basis computed once.
class Ideal {
public:
    Ideal() = default;
    Ideal(ContextPtr ctx, std::vector<Polynomial> gens);

    const ContextPtr& context() const { return ctx_; }
    std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord,
                                                  std::size_t budget = kDefaultBudget) const;

    // True when the reduced Groebner basis is {1}.
    bool is_unit(std::size_t budget = kDefaultBudget) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, std::vector<Polynomial>> entries;
    };

    ContextPtr ctx_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

} // namespace coneinf
