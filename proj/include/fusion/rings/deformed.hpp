#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

/// Quantum integers for q + 1/q = d: u_0 = 1, u_1 = d,
/// u_{k+1} = d*u_k - u_{k-1}, returned for k = 0..K. Requires d >= 2,
/// which keeps every u_k positive (d = 2 gives u_k = k+1).
std::vector<BigInt> qint_dims(std::int64_t d, int K);

/// SL(2) fusion with the dimension function deformed to quantum
/// integers: dim(k) = u_k for parameter d = dim of the fundamental
/// label. Catalog id "be:<d>".
class DeformedSL2Ring : public Ring {
public:
    explicit DeformedSL2Ring(std::int64_t d);

    std::int64_t deformation() const { return d_; }
    std::string description() const override;
    Label unit() const override { return Label{0}; }
    void check_label(const Label& l) const override;
    Element fuse(const Label& a, const Label& b) const override;
    std::vector<Label> fuse_support(const Label& a, const Label& b) const override;
    BigInt dim(const Label& l) const override;
    Label random_label(std::mt19937_64& rng, int magnitude) const override;

private:
    std::int64_t d_;
    mutable std::mutex mu_;
    mutable std::vector<BigInt> dims_;  // guarded by mu_
};

/// GL(2) fusion with quantum-integer dimensions depending only on the
/// spin part (the determinant class stays 1-dimensional). Catalog id
/// "gef:<d>".
class DeformedGL2Ring : public Ring {
public:
    explicit DeformedGL2Ring(std::int64_t d);

    std::int64_t deformation() const { return d_; }
    std::string description() const override;
    Label unit() const override { return Label{0, 0}; }
    void check_label(const Label& l) const override;
    Element fuse(const Label& a, const Label& b) const override;
    std::vector<Label> fuse_support(const Label& a, const Label& b) const override;
    BigInt dim(const Label& l) const override;
    Label random_label(std::mt19937_64& rng, int magnitude) const override;

private:
    std::int64_t d_;
    mutable std::mutex mu_;
    mutable std::vector<BigInt> dims_;  // guarded by mu_
};

}  // namespace fusion
