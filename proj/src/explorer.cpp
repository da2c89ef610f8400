#include "iipm/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "iipm/io.hpp"

namespace iipm {

namespace {

/// Odometer over all d x d matrices, row-major, last entry fastest; yields
/// masks in ascending lexicographic order.
class MatrixCounter {
 public:
  MatrixCounter(Ring ring, Index d) : ring_(ring), digits_(size_t(d) * size_t(d), 0), d_(d) {}

  MatE current() const {
    MatE m(d_, d_);
    size_t idx = 0;
    for (Index i = 0; i < d_; ++i)
      for (Index j = 0; j < d_; ++j) m(i, j) = Elem(ring_.data(), digits_[idx++]);
    return m;
  }

  bool advance() {
    const uint64_t top = ring_.order() - 1;
    for (size_t i = digits_.size(); i-- > 0;) {
      if (digits_[i] < top) {
        ++digits_[i];
        std::fill(digits_.begin() + long(i) + 1, digits_.end(), 0);
        return true;
      }
    }
    return false;
  }

 private:
  Ring ring_;
  std::vector<uint64_t> digits_;
  Index d_;
};

}  // namespace

void for_each_self_adjoint(const Space& s, const std::function<void(const Operator&)>& fn) {
  const Ring ring = s.ring();
  if (!ring.is_field() || ring.order() > 16)
    throw SearchTooLarge("enumeration needs a field with at most 16 elements");
  const double cells = double(s.dim()) * double(s.dim());
  if (std::pow(double(ring.order()), cells) > double(1 << 24))
    throw SearchTooLarge("enumeration space exceeds 2^24 matrices");

  MatrixCounter counter(ring, s.dim());
  do {
    const Operator candidate{s, counter.current()};
    if (is_self_adjoint(candidate)) fn(candidate);
  } while (counter.advance());
}

std::vector<Operator> enumerate_self_adjoint(const Space& s) {
  std::vector<Operator> out;
  for_each_self_adjoint(s, [&](const Operator& t) { out.push_back(t); });
  return out;
}

std::vector<CensusRow> exhaustive_verify(const Space& s, int max_n, int max_power) {
  if (max_n < 1) throw Error("census needs max_n >= 1");
  if (max_power < 1) throw Error("census needs max_power >= 1");
  std::vector<CensusRow> rows;
  const std::string ring_id = ring_csv_id(s.ring());
  const std::string gram_id = mat_csv_id(s.gram());
  for_each_self_adjoint(s, [&](const Operator& t) {
    CensusRow row;
    row.ring_id = ring_id;
    row.dim = int(s.dim());
    row.gram_id = gram_id;
    row.operator_id = mat_csv_id(t.mat);
    row.halmos_ok = verify_dilation(t, DilationKind::halmos).ok();
    row.egervary_ok = true;
    for (int n = 1; n <= max_n; ++n) {
      VerifyOptions opt;
      opt.egervary_n = n;
      const DilationReport report = verify_dilation(t, DilationKind::egervary, opt);
      row.egervary_ok = row.egervary_ok && report.ok();
      if (n == max_n) row.egervary_n1_holds = report.power_holds(n + 1);
    }
    VerifyOptions lazy_opt;
    lazy_opt.max_power = max_power;
    lazy_opt.window = std::max(8, max_power);
    row.sznagy_ok = verify_dilation(t, DilationKind::sznagy, lazy_opt).ok();
    row.isometric_ok = verify_dilation(t, DilationKind::isometric, lazy_opt).ok();
    rows.push_back(std::move(row));
  });
  return rows;
}

std::string census_csv(std::vector<CensusRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
    return std::tie(a.ring_id, a.dim, a.gram_id, a.operator_id) <
           std::tie(b.ring_id, b.dim, b.gram_id, b.operator_id);
  });
  std::ostringstream out;
  out << "ring,dim,gram,operator,halmos,egervary,sznagy,isometric,egervary_n1\n";
  for (const CensusRow& r : rows)
    out << r.ring_id << ',' << r.dim << ',' << r.gram_id << ',' << r.operator_id << ','
        << int(r.halmos_ok) << ',' << int(r.egervary_ok) << ',' << int(r.sznagy_ok) << ','
        << int(r.isometric_ok) << ',' << int(r.egervary_n1_holds) << '\n';
  return out.str();
}

namespace {

/// Unitaries on the doubled space whose top-left d x d block equals corner;
/// the three free blocks are brute-forced in lexicographic order.
std::vector<Operator> unitaries_with_corner(const Operator& corner, const Space& big,
                                            uint64_t budget, uint64_t& examined) {
  const Space& s = corner.space;
  const Ring ring = s.ring();
  const Index d = s.dim();
  std::vector<Operator> found;

  std::vector<uint64_t> digits(size_t(3 * d * d), 0);
  const uint64_t top = ring.order() - 1;
  while (true) {
    if (++examined > budget) throw SearchTooLarge();
    MatE u = zero_matrix(ring, 2 * d, 2 * d);
    u.block(0, 0, d, d) = corner.mat;
    size_t idx = 0;
    auto fill = [&](Index r0, Index c0) {
      for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) u(r0 + i, c0 + j) = Elem(ring.data(), digits[idx++]);
    };
    fill(0, d);
    fill(d, 0);
    fill(d, d);

    const Operator candidate{big, u};
    if (classify(candidate).unitary) found.push_back(candidate);

    bool advanced = false;
    for (size_t i = digits.size(); i-- > 0;) {
      if (digits[i] < top) {
        ++digits[i];
        std::fill(digits.begin() + long(i) + 1, digits.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return found;
}

}  // namespace

AndoResult ando_search(const Operator& t1, const Operator& t2, uint64_t budget) {
  if (!t1.space.same_as(t2.space)) throw SpaceMismatch();
  if (!is_self_adjoint(t1) || !is_self_adjoint(t2)) throw NotSelfAdjoint();
  if (t1 * t2 != t2 * t1) throw Error("operators do not commute");

  const Space& s = t1.space;
  const Ring ring = s.ring();
  const double cells = 3.0 * double(s.dim()) * double(s.dim());
  const double per_side = std::pow(double(ring.order()), cells);
  if (2.0 * per_side > double(budget)) throw SearchTooLarge();

  AndoResult result;
  result.t1 = t1;
  result.t2 = t2;

  const Space big = direct_sum(s, 2);
  const std::vector<Operator> side1 = unitaries_with_corner(t1, big, budget, result.search_space);
  const std::vector<Operator> side2 = unitaries_with_corner(t2, big, budget, result.search_space);
  for (const Operator& u1 : side1) {
    for (const Operator& u2 : side2) {
      if (u1 * u2 == u2 * u1) {
        result.found = true;
        result.witness = {u1, u2};
        return result;
      }
    }
  }
  return result;
}

bool ando_verify(const AndoResult& result) {
  if (!result.found || !result.witness) return false;
  const auto& [u1, u2] = *result.witness;
  const Index d = result.t1.space.dim();
  return classify(u1).unitary && classify(u2).unitary && u1 * u2 == u2 * u1 &&
         compress(u1, 0, d) == result.t1 && compress(u2, 0, d) == result.t2;
}

}  // namespace iipm
