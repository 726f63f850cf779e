#include "realdiv/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace realdiv {

Eigen::MatrixXd spd_sqrt_factor(const Eigen::MatrixXd& T) {
    const auto n = T.rows();
    if (n != T.cols()) throw FactorizationError("spd_sqrt_factor: matrix not square", 0);
    const double scale = T.cwiseAbs().maxCoeff();
    if ((T - T.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
        throw FactorizationError("spd_sqrt_factor: matrix not symmetric", 0);

    // B upper triangular, T = B^T B: B(i, j) for i <= j, eliminating rows top
    // down.  Equivalent to the classical L L^T with B = L^T.
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double d = T(i, i);
        for (Eigen::Index k = 0; k < i; ++k) d -= B(k, i) * B(k, i);
        if (!(d > 0.0))
            throw FactorizationError(
                "spd_sqrt_factor: leading minor of order " + std::to_string(i + 1) +
                    " is not positive",
                static_cast<int>(i + 1));
        B(i, i) = std::sqrt(d);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double s = T(i, j);
            for (Eigen::Index k = 0; k < i; ++k) s -= B(k, i) * B(k, j);
            B(i, j) = s / B(i, i);
        }
    }
    return B;
}

int rank_mod2(const Eigen::MatrixXi& M) {
    const auto rows = M.rows();
    const auto cols = M.cols();
    if (cols > 64) throw std::invalid_argument("rank_mod2: supports up to 64 columns");
    std::vector<std::uint64_t> r(static_cast<size_t>(rows), 0);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            if (M(i, j) & 1) r[static_cast<size_t>(i)] |= (std::uint64_t{1} << j);

    int rank = 0;
    for (Eigen::Index col = 0; col < cols; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        size_t pivot = static_cast<size_t>(rows);
        for (size_t i = static_cast<size_t>(rank); i < r.size(); ++i)
            if (r[i] & bit) {
                pivot = i;
                break;
            }
        if (pivot == static_cast<size_t>(rows)) continue;
        std::swap(r[static_cast<size_t>(rank)], r[pivot]);
        for (size_t i = 0; i < r.size(); ++i)
            if (i != static_cast<size_t>(rank) && (r[i] & bit)) r[i] ^= r[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank;
}

}  // namespace realdiv
