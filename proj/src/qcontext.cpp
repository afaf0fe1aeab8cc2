#include "qmzeta/qstirling.hpp"

#include <numeric>

namespace qmzeta {

namespace {

std::mutex registry_mutex;

std::map<std::string, std::shared_ptr<QContext<Rational>>>& rational_registry() {
    static std::map<std::string, std::shared_ptr<QContext<Rational>>> reg;
    return reg;
}

std::map<std::pair<long, long>, std::shared_ptr<QContext<CycloElem>>>& root_registry() {
    static std::map<std::pair<long, long>, std::shared_ptr<QContext<CycloElem>>> reg;
    return reg;
}

}  // namespace

std::shared_ptr<QContext<Rational>> rational_context(const Rational& q) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = rational_registry();
    std::string key = q.to_string();
    auto it = reg.find(key);
    if (it == reg.end())
        it = reg.emplace(key, std::make_shared<QContext<Rational>>(q)).first;
    return it->second;
}

std::shared_ptr<QContext<CycloElem>> root_context(long n, long exponent) {
    if (n < 1) throw std::invalid_argument("root_context: n must be >= 1");
    long a = exponent % n;
    if (a < 0) a += n;
    if (std::gcd(a, n) != 1)
        throw std::invalid_argument("root_context: exponent not coprime to n");
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = root_registry();
    auto key = std::make_pair(n, a);
    auto it = reg.find(key);
    if (it == reg.end()) {
        auto ctx = std::make_shared<QContext<CycloElem>>(CycloElem::zeta_power(n, a));
        it = reg.emplace(key, std::move(ctx)).first;
    }
    return it->second;
}

Rational r_stirling1_q1(long n, long k, long r) {
    auto ctx = rational_context(Rational(1));
    return stirling1(*ctx, n, k, r, 1);
}

}  // namespace qmzeta
