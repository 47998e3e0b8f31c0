#include "knapkern/lattice.hpp"

#include "knapkern/error.hpp"

namespace knapkern {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

// Nearest integer to num/den for den > 0, halves rounded toward +infinity.
Int round_div(const Int& num, const Int& den) {
  Int twice = 2 * num + den;
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), Int(2 * den).get_mpz_t());
  return out;
}

// Integral LLL state; indices are 0-based, d[0] stands for d_{-1} = 1.
class IntegralLll {
 public:
  IntegralLll(IntMatrix& basis, const Rational& delta)
      : b_(basis), n_(basis.size()), d_(n_ + 1), lambda_(n_, std::vector<Int>(n_)) {
    delta_num_ = delta.get_num();
    delta_den_ = delta.get_den();
  }

  void run() {
    if (n_ == 0) return;
    d_[0] = 1;
    d_[1] = dot(b_[0], b_[0]);
    if (d_[1] == 0) fail(ErrorCode::precondition, "lll: zero basis vector");
    std::size_t k = 1;
    std::size_t k_max = 0;
    while (k < n_) {
      if (k > k_max) {
        k_max = k;
        extend_gram_schmidt(k);
      }
      for (;;) {
        size_reduce(k, k - 1);
        if (lovasz_fails(k)) {
          swap(k, k_max);
          if (k > 1) --k;
          continue;
        }
        for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
        ++k;
        break;
      }
    }
  }

 private:
  // D(i) = d_i in 1-based notation: product of the first i squared GS norms.
  Int& D(std::size_t i) { return d_[i + 1]; }
  Int& Dprev(std::size_t i) { return d_[i]; }

  void extend_gram_schmidt(std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Int u = dot(b_[k], b_[j]);
      for (std::size_t i = 0; i < j; ++i) {
        u = (D(i) * u - lambda_[k][i] * lambda_[j][i]) / Dprev(i);
      }
      if (j < k) {
        lambda_[k][j] = u;
      } else {
        if (u == 0) fail(ErrorCode::precondition, "lll: basis vectors are linearly dependent");
        D(k) = u;
      }
    }
  }

  void size_reduce(std::size_t k, std::size_t l) {
    Int twice = 2 * lambda_[k][l];
    if (abs(twice) <= D(l)) return;
    const Int q = round_div(lambda_[k][l], D(l));
    for (std::size_t c = 0; c < b_[k].size(); ++c) b_[k][c] -= q * b_[l][c];
    lambda_[k][l] -= q * D(l);
    for (std::size_t i = 0; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  // Lovasz condition in integers: den d_k d_{k-2} >= num d_{k-1}^2 - den lambda^2.
  bool lovasz_fails(std::size_t k) {
    const Int& lam = lambda_[k][k - 1];
    const Int lhs = delta_den_ * D(k) * Dprev(k - 1);
    const Int rhs = delta_num_ * D(k - 1) * D(k - 1) - delta_den_ * lam * lam;
    return lhs < rhs;
  }

  void swap(std::size_t k, std::size_t k_max) {
    std::swap(b_[k], b_[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const Int lam = lambda_[k][k - 1];
    const Int new_d = (Dprev(k - 1) * D(k) + lam * lam) / D(k - 1);
    for (std::size_t i = k + 1; i <= k_max; ++i) {
      const Int t = lambda_[i][k];
      lambda_[i][k] = (D(k) * lambda_[i][k - 1] - lam * t) / D(k - 1);
      lambda_[i][k - 1] = (new_d * t + lam * lambda_[i][k]) / D(k);
    }
    D(k - 1) = new_d;
  }

  IntMatrix& b_;
  std::size_t n_;
  std::vector<Int> d_;
  std::vector<std::vector<Int>> lambda_;
  Int delta_num_;
  Int delta_den_;
};

}  // namespace

void lll_reduce(IntMatrix& basis, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta >= 1) {
    fail(ErrorCode::precondition, "lll: delta must lie in (1/4, 1)");
  }
  for (const auto& row : basis) {
    if (row.size() != basis.front().size()) fail(ErrorCode::precondition, "lll: ragged basis");
  }
  IntegralLll(basis, delta).run();
}

DiophantineApproximation simultaneous_approximation(std::span<const Rational> alpha, const Nat& M) {
  if (M < 1) fail(ErrorCode::precondition, "approximation: M must be positive");
  const std::size_t r = alpha.size();
  if (r == 0) return DiophantineApproximation{Int(1), {}};

  Int lcm_den = 1;
  for (const auto& a : alpha) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.get_den_mpz_t());
  const unsigned long shift = (r * (r + 1) + 3) / 4;  // ceil(r(r+1)/4)
  // Last coordinate weight delta = 1 / (2^shift M^{r+1}); scaling every
  // entry by S = lcm * 2^shift * M^{r+1} makes the basis integral.
  const Int S = lcm_den * pow_ui(2, shift) * pow_int(M, r + 1);

  IntMatrix basis(r + 1, std::vector<Int>(r + 1, 0));
  std::vector<Int> scaled_alpha(r);
  for (std::size_t i = 0; i < r; ++i) {
    basis[i][i] = S;
    const Rational scaled = alpha[i] * Rational(S);
    scaled_alpha[i] = scaled.get_num();  // exact: the lcm divides S
    basis[r][i] = scaled_alpha[i];
  }
  basis[r][r] = lcm_den;
  lll_reduce(basis);

  // shortest = q * (alpha row) + sum_i c_i S e_i, so its last entry is
  // q * lcm and q alpha_i - p_i = shortest_i / S with p_i = -c_i.
  const auto& shortest = basis.front();
  const Int q = shortest[r] / lcm_den;
  if (q == 0) fail(ErrorCode::invariant, "approximation: lattice reduction returned q = 0");
  const int orientation = sgn(q) < 0 ? -1 : 1;
  DiophantineApproximation out;
  out.q = orientation * q;
  out.p.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Int c = (shortest[i] - q * scaled_alpha[i]) / S;
    out.p[i] = -orientation * c;
  }
  return out;
}

}  // namespace knapkern
