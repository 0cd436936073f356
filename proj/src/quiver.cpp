#include "quiver.hpp"

namespace excseq {

Quiver make_quiver(int n, const std::vector<Sign>& eps) {
    if (n < 2) throw std::invalid_argument("quiver needs at least 2 vertices");
    if (static_cast<int>(eps.size()) != n)
        throw std::invalid_argument("orientation vector length must equal n");
    bool has_plus = false, has_minus = false;
    for (Sign s : eps) (s == Sign::plus ? has_plus : has_minus) = true;
    if (!has_plus || !has_minus)
        throw std::invalid_argument(
            "cyclic orientation: the path algebra is not finite dimensional");
    Quiver q;
    q.n = n;
    q.eps = eps;
    return q;
}

Quiver make_quiver(int n, const std::string& signs) {
    std::vector<Sign> eps;
    eps.reserve(signs.size());
    for (char c : signs) {
        if (c == '+')
            eps.push_back(Sign::plus);
        else if (c == '-')
            eps.push_back(Sign::minus);
        else
            throw std::invalid_argument("orientation characters must be '+' or '-'");
    }
    return make_quiver(n, eps);
}

Quiver opposite(const Quiver& q) {
    std::vector<Sign> eps;
    eps.reserve(q.eps.size());
    for (Sign s : q.eps) eps.push_back(flipped(s));
    return make_quiver(q.n, eps);
}

ArrowInfo arrow_info(const Quiver& q, int v) {
    if (v < 0 || v >= q.n) throw std::invalid_argument("arrow index out of range");
    int w = (v + 1) % q.n;
    if (q.eps[v] == Sign::plus) return {v, v, w};
    return {v, w, v};
}

}  // namespace excseq
