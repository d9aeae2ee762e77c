#include "rsc/roots.hpp"

#include <algorithm>
#include <numeric>

#include "rsc/error.hpp"
#include "rsc/numerics/recognize.hpp"
#include "rsc/transform.hpp"

namespace rsc {

namespace {

BigReal with_bits(const BigReal& x, long bits) {
  BigReal r(bits);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigComplex with_bits(const BigComplex& z, long bits) { return {with_bits(z.real(), bits), with_bits(z.imag(), bits)}; }

NumericCubic with_bits(const NumericCubic& f, long bits) {
  return {with_bits(f.P, bits), with_bits(f.Q, bits), with_bits(f.R, bits)};
}

std::array<TrigRoot, 3> trig_from_shift(const RamanujanShift<BigComplex>& shift, const PrecisionContext& ctx) {
  for (const auto* v : {&shift.a, &shift.c, &shift.B}) {
    BigReal bound = ctx.tolerance() * (abs(*v) + BigReal(1, ctx.bits()));
    if (abs(v->imag()) > bound) throw Error(ErrorCode::NonRealShift, "shift data is not real");
  }
  auto roots = rsc_trig_roots(shift.B.real(), ctx);
  for (auto& r : roots) r.value = (shift.a.real() - r.value) / shift.c.real();
  return roots;
}

}  // namespace

std::array<TrigRoot, 3> rsc_trig_roots(const BigReal& B, const PrecisionContext& ctx) {
  const long bits = ctx.bits() + 32;
  const BigReal b = with_bits(B, bits);
  const BigReal pi_ = pi(bits);
  BigReal offset(bits);
  int first_k = 2;
  if (b.is_zero()) {
    offset = pi_ / 6;
  } else {
    offset = atan(sqrt(BigReal(27, bits)) / b) / 3;
    if (b.sign() < 0) first_k = 1;
  }
  const BigReal amplitude = sqrt(b * b + BigReal(27, bits));
  const BigReal center = (b + BigReal(3, bits)) / 2;
  std::array<TrigRoot, 3> out{TrigRoot{0, BigReal(ctx.bits()), BigReal(ctx.bits())},
                              TrigRoot{0, BigReal(ctx.bits()), BigReal(ctx.bits())},
                              TrigRoot{0, BigReal(ctx.bits()), BigReal(ctx.bits())}};
  for (int i = 0; i < 3; ++i) {
    const int k = first_k + 2 * i;
    BigReal angle = pi_ * k / 3 + offset;
    BigReal value = (center + amplitude * cos(angle)) / 3;
    out[i] = TrigRoot{k, with_bits(value, ctx.bits()), with_bits(angle, ctx.bits())};
  }
  return out;
}

std::array<TrigRoot, 3> cubic_trig_roots(const NumericCubic& f, const PrecisionContext& ctx) {
  auto shift = classify_and_shift(f, ctx);
  if (std::holds_alternative<Translation<BigComplex>>(shift))
    throw Error(ErrorCode::TranslationCase, "c = 0: the cubic is a translate of x^3");
  return trig_from_shift(std::get<RamanujanShift<BigComplex>>(shift), ctx);
}

std::array<TrigRoot, 3> cubic_trig_roots(const ExactCubic& f, const PrecisionContext& ctx) {
  auto any = classify_and_shift(f, ctx);
  if (const auto* exact = std::get_if<ShiftResult<FieldElement>>(&any)) {
    if (std::holds_alternative<Translation<FieldElement>>(*exact))
      throw Error(ErrorCode::TranslationCase, "c = 0: the cubic is a translate of x^3");
    const auto& r = std::get<RamanujanShift<FieldElement>>(*exact);
    if (!r.a.is_real() || !r.c.is_real() || !r.B.is_real())
      throw Error(ErrorCode::NonRealShift, "B = " + r.B.to_string() + " is not real");
    RamanujanShift<BigComplex> numeric{embed_complex(r.a, ctx), embed_complex(r.c, ctx), embed_complex(r.B, ctx),
                                       NumericCubic{}, SerretData<BigComplex>{}};
    return trig_from_shift(numeric, ctx);
  }
  const auto& shift = std::get<ShiftResult<BigComplex>>(any);
  if (std::holds_alternative<Translation<BigComplex>>(shift))
    throw Error(ErrorCode::TranslationCase, "c = 0: the cubic is a translate of x^3");
  return trig_from_shift(std::get<RamanujanShift<BigComplex>>(shift), ctx);
}

void sort_roots(std::vector<BigComplex>& roots, const PrecisionContext& ctx) {
  std::stable_sort(roots.begin(), roots.end(), [&](const BigComplex& x, const BigComplex& y) {
    BigReal scale = abs(x) + abs(y) + BigReal(1, ctx.bits());
    if (abs(x.real() - y.real()) > ctx.tolerance() * scale) return x.real() < y.real();
    return x.imag() < y.imag() && abs(x.imag() - y.imag()) > ctx.tolerance() * scale;
  });
}

std::array<BigComplex, 3> solve_numeric(const NumericCubic& input, const PrecisionContext& ctx) {
  const long bits = 2 * ctx.bits() + 32;
  const NumericCubic f = with_bits(input, bits);
  const BigComplex shift = f.P / 3;
  // x = y - P/3: y^3 + p y + q
  const BigComplex p = f.Q - f.P * f.P / 3;
  const BigComplex q = f.P * f.P * f.P * 2 / 27 - f.P * f.Q / 3 + f.R;
  std::vector<BigComplex> roots;
  const BigComplex s = principal_sqrt(q * q / 4 + p * p * p / 27);
  BigComplex u3 = -q / 2 + s;
  BigComplex alt = -q / 2 - s;
  if (abs(alt) > abs(u3)) u3 = alt;
  if (u3.is_zero()) {
    for (int i = 0; i < 3; ++i) roots.push_back(-shift);
  } else {
    const auto us = cube_roots(u3);
    for (const auto& u : us) roots.push_back(u - p / (u * 3) - shift);
  }
  for (auto& x : roots) {
    BigReal best = abs(f.eval(x));
    for (int iter = 0; iter < 60 && !best.is_zero(); ++iter) {
      BigComplex deriv = f.derivative(x);
      if (deriv.is_zero()) break;
      BigComplex next = x - f.eval(x) / deriv;
      BigReal r = abs(f.eval(next));
      if (!(r < best)) break;
      x = next;
      best = r;
    }
  }
  const BigReal bound = ctx.tolerance() * coefficient_norm(input);
  std::vector<BigComplex> out;
  for (auto& x : roots) {
    if (abs(f.eval(x)) > bound) throw Error(ErrorCode::NonConvergence, "root residual above tolerance");
    out.push_back(with_bits(x, ctx.bits()));
  }
  sort_roots(out, ctx);
  return {out[0], out[1], out[2]};
}

std::array<BigComplex, 3> solve_numeric(const ExactCubic& f, const PrecisionContext& ctx) {
  return solve_numeric(to_numeric(f, ctx), ctx);
}

BigReal multiset_distance(std::span<const BigComplex> a, std::span<const BigComplex> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "multisets of different sizes");
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<BigReal> best;
  do {
    BigReal worst(a.empty() ? BigReal::kDefaultBits : a[0].precision());
    for (std::size_t i = 0; i < a.size(); ++i) {
      BigReal d = abs(a[i] - b[perm[i]]);
      if (d > worst) worst = d;
    }
    if (!best || worst < *best) best = worst;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best ? *best : BigReal();
}

std::string Permutation::cycles() const {
  std::vector<bool> seen(sigma.size(), false);
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i] || sigma[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(sigma[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(sigma.size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

Permutation permutation_under(const MobiusMap<BigComplex>& map, std::span<const BigComplex> values,
                              const PrecisionContext& ctx) {
  Permutation p;
  std::vector<bool> used(values.size(), false);
  for (const auto& v : values) {
    auto image = mobius_apply(map, Extended<BigComplex>::finite(v), ctx);
    if (image.infinite) throw Error(ErrorCode::NotAPermutation, "a value maps to infinity");
    int match = -1;
    for (std::size_t j = 0; j < values.size(); ++j) {
      BigReal scale = abs(values[j]) + BigReal(1, ctx.bits());
      if (abs(image.value - values[j]) < ctx.tolerance() * scale) {
        match = static_cast<int>(j);
        break;
      }
    }
    if (match < 0 || used[static_cast<std::size_t>(match)])
      throw Error(ErrorCode::NotAPermutation, "image " + image.value.to_string() + " matches no unused value");
    used[static_cast<std::size_t>(match)] = true;
    p.sigma.push_back(match);
  }
  return p;
}

std::optional<std::array<FieldElement, 3>> exact_roots(const ExactCubic& f, const PrecisionContext& ctx) {
  std::vector<SqrtKey> keys;
  for (const FieldElement* x : {&f.P, &f.Q, &f.R})
    for (const auto& t : x->terms())
      if (t.key != 1) keys.push_back(t.key);
  const std::vector<SqrtKey> gens = canonical_gens(keys);
  if (std::any_of(gens.begin(), gens.end(), [](SqrtKey g) { return g < 0; })) return std::nullopt;

  const auto Ps = conjugates(f.P, gens), Qs = conjugates(f.Q, gens), Rs = conjugates(f.R, gens);
  std::vector<std::array<BigReal, 3>> conj_roots;
  for (std::size_t i = 0; i < Ps.size(); ++i) {
    auto roots = solve_numeric(ExactCubic{Ps[i], Qs[i], Rs[i]}, ctx);
    std::array<BigReal, 3> real;
    for (std::size_t j = 0; j < 3; ++j) {
      if (!ctx.negligible(roots[j].imag())) return std::nullopt;
      real[j] = roots[j].real();
    }
    conj_roots.push_back(std::move(real));
  }

  const mpz_class height("1000000000");
  const std::size_t others = conj_roots.size() - 1;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < others; ++i) combos *= 3;
  std::vector<FieldElement> found;
  for (const auto& r0 : conj_roots[0]) {
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<BigReal> values{r0};
      std::size_t c = code;
      for (std::size_t i = 1; i <= others; ++i, c /= 3) values.push_back(conj_roots[i][c % 3]);
      auto x = recognize_from_conjugates(values, gens, height, ctx);
      if (x && f.eval(*x).is_zero()) {
        found.push_back(*x);
        break;
      }
    }
  }
  if (found.size() != 3 || found[0] == found[1] || found[1] == found[2] || found[0] == found[2]) return std::nullopt;
  std::sort(found.begin(), found.end(),
            [&](const FieldElement& a, const FieldElement& b) { return embed(a, ctx) < embed(b, ctx); });
  return std::array<FieldElement, 3>{found[0], found[1], found[2]};
}

}  // namespace rsc
