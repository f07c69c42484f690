#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "nakayama/verifier.hpp"

namespace nakayama {

namespace {

using Sparse = Eigen::SparseMatrix<double>;

int rank_of(const Eigen::MatrixXd& m)
{
    if (m.size() == 0)
        return 0;
    return static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(m).rank());
}

Eigen::MatrixXd power_applied(const Sparse& op, const Eigen::MatrixXd& generators, int t)
{
    Eigen::MatrixXd x = generators;
    for (int i = 0; i < t; ++i)
        x = op * x;
    return x;
}

}  // namespace

int phi_by_matrix_rank(const Algebra& algebra, Direction dir)
{
    // K_0 (or its dual) is free on the non-terminal indecomposables.
    std::vector<Module> basis;
    for (const Module& m : indecomposables(algebra))
        if (!is_terminal(algebra, m, dir))
            basis.push_back(m);
    const auto n = static_cast<Eigen::Index>(basis.size());
    if (n == 0)
        return 0;

    auto position = [&](Module m) {
        return static_cast<Eigen::Index>(std::lower_bound(basis.begin(), basis.end(), m) - basis.begin());
    };

    std::vector<Eigen::Triplet<double>> entries;
    for (Eigen::Index col = 0; col < n; ++col) {
        auto image = step(algebra, basis[static_cast<std::size_t>(col)], dir);
        if (image && !is_terminal(algebra, *image, dir))
            entries.emplace_back(position(*image), col, 1.0);
    }
    Sparse op(n, n);
    op.setFromTriplets(entries.begin(), entries.end());

    const Eigen::MatrixXd generators = Eigen::MatrixXd::Identity(n, n);

    // Images of an n x n map stabilise after n steps and the map is bijective there,
    // so rank(L^t G) is constant from t = n on. Ranks never increase: binary search.
    const int horizon = static_cast<int>(n);
    const int limit = rank_of(power_applied(op, generators, horizon));
    int lo = 0;
    int hi = horizon;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (rank_of(power_applied(op, generators, mid)) == limit)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace nakayama
