#include "coneinf/ideal.hpp"

#include "coneinf/errors.hpp"
#include "coneinf/groebner.hpp"

namespace coneinf {

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_context(g.context(), ctx_))
            throw context_error("generator context does not match ideal context");
        gens_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord,
                                                     std::size_t budget) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->entries.find(ord);
        if (it != cache_->entries.end()) return it->second;
    }
    std::vector<Polynomial> gb = buchberger(gens_, ord, budget);
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->entries.try_emplace(ord, std::move(gb));
    return it->second;
}

bool Ideal::is_unit(std::size_t budget) const {
    const auto& gb = groebner_basis(MonomialOrder::grevlex(), budget);
    return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

} // namespace coneinf
