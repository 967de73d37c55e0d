#include "substfreq/closed_form.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace substfreq {

namespace {

BigInt int_pow(long long base, long long exp) {
  BigInt r = 1;
  for (long long i = 0; i < exp; ++i) r *= base;
  return r;
}

Rational scale(long long b, long long ell) { return Rational(1, int_pow(b, ell)); }

Word canonical_run(int start, int n, int m) {
  Word w;
  w.reserve(n);
  for (int i = 0; i < n; ++i) w.push_back(reduce_mod(start + i, m));
  return w;
}

Letter ext_letter(const ClosedFormContext& ctx, int k) {
  return reduce_mod(-1 + static_cast<long long>(k) * (ctx.b - 1), ctx.m);
}

}  // namespace

ClosedFormContext closed_form_context(int b, int m) {
  if (b < 2 || m < 1) throw std::invalid_argument("closed_form_context: need b >= 2, m >= 1");
  ClosedFormContext ctx;
  ctx.b = b;
  ctx.m = m;
  ctx.q = m / std::gcd(b - 1, m);
  ctx.periodic = (b - 1) % m == 0;
  if (!ctx.periodic)
    ctx.f = Rational(int_pow(b, ctx.q - 1) * (b - 1), BigInt(m) * (int_pow(b, ctx.q) - 1));
  return ctx;
}

GammaSmall gamma_small_frequencies(const ClosedFormContext& ctx, int n) {
  if (ctx.periodic)
    throw std::invalid_argument("gamma_small_frequencies: periodic word has no special factors");
  if (n < 1 || n > 2 * ctx.b - 1)
    throw std::out_of_range("gamma_small_frequencies: need 1 <= n <= 2b-1");

  const int b = ctx.b, m = ctx.m, q = ctx.q;
  const Rational f = ctx.f;
  const Rational inv_m(1, m);
  GammaSmall g;
  g.n = n;

  if (n <= b) {
    g.bs_vertex = canonical_run(0, n, m);
    g.bs_vertex_freq = n == 1 ? inv_m : Rational(n - 1) * f - Rational(n - 2) * inv_m;
    g.edges_into_bs.emplace(Word{ext_letter(ctx, 0)} + g.bs_vertex,
                            Rational(n) * f - Rational(n - 1) * inv_m);
    for (int k = 1; k < q; ++k)
      g.edges_into_bs.emplace(Word{ext_letter(ctx, k)} + g.bs_vertex, f * scale(b, k));
    return g;
  }

  g.bs_vertex = canonical_run(0, n, m);
  g.bs_vertex_freq = f * scale(b, q - 1) - Rational(n - b - 1) * f * scale(b, q);
  g.edges_into_bs.emplace(Word{ext_letter(ctx, 0)} + g.bs_vertex,
                          f * scale(b, q - 1) - Rational(n - b) * f * scale(b, q));
  g.edges_into_bs.emplace(Word{reduce_mod(b - 2, m)} + g.bs_vertex, f * scale(b, q));

  Word ls = canonical_run(0, b, m);
  for (int i = 1; i <= n - b; ++i) ls.push_back(reduce_mod(i, m));
  g.ls_vertex = ls;
  g.ls_vertex_freq = f * scale(b, 1);
  g.edges_into_ls.emplace(Word{ext_letter(ctx, 0)} + ls, f * scale(b, q));
  g.edges_into_ls.emplace(Word{ext_letter(ctx, 1)} + ls,
                          (Rational(2) * f - inv_m) * scale(b, 1));
  for (int k = 2; k < q; ++k)
    g.edges_into_ls.emplace(Word{ext_letter(ctx, k)} + ls, f * scale(b, k));
  Word out = ls;
  out.push_back(reduce_mod(n + 1 - b, m));
  g.edge_out_of_ls = {std::move(out), f * scale(b, 1)};
  return g;
}

std::set<Rational> GammaSmall::edge_values() const {
  std::set<Rational> vals;
  for (const auto& [w, r] : edges_into_bs) vals.insert(r);
  for (const auto& [w, r] : edges_into_ls) vals.insert(r);
  if (edge_out_of_ls) vals.insert(edge_out_of_ls->second);
  return vals;
}

namespace {

std::set<Rational> row_values(const ClosedFormContext& ctx, const std::string& row,
                              long long n, long long ell) {
  const int b = ctx.b, m = ctx.m, q = ctx.q;
  const Rational f = ctx.f;
  const Rational inv_m(1, m);
  const Rational s = scale(b, ell);
  std::set<Rational> vals;
  if (row == "N=0") {
    vals.insert(inv_m);
  } else if (row == "N=1") {
    for (int k = 0; k < q; ++k) vals.insert(f * scale(b, k));
  } else if (row == "strict n in 3..b") {
    vals.insert(s * (Rational(n - 1) * f - Rational(n - 2) * inv_m));
    vals.insert(s * (Rational(n) * f - Rational(n - 1) * inv_m));
    for (int k = 1; k < q; ++k) vals.insert(s * f * scale(b, k));
  } else if (row == "strict n in b+1..2b-1") {
    vals.insert(s * (f * scale(b, q - 1) - Rational(n - b - 1) * f * scale(b, q)));
    vals.insert(s * (f * scale(b, q - 1) - Rational(n - b) * f * scale(b, q)));
    vals.insert(scale(b, ell + 1) * (Rational(2) * f - inv_m));
    for (int k = 1; k <= q; ++k) vals.insert(s * f * scale(b, k));
  } else if (row == "strict n = 2b") {
    vals.insert(scale(b, ell + 1) * (Rational(2) * f - inv_m));
    for (int k = 0; k < q; ++k) vals.insert(scale(b, ell + 1) * f * scale(b, k));
  } else if (row == "exact n in 2..b") {
    vals.insert(s * (Rational(n) * f - Rational(n - 1) * inv_m));
    for (int k = 1; k < q; ++k) vals.insert(s * f * scale(b, k));
  } else if (row == "exact n in b+1..2b-1") {
    vals.insert(s * (f * scale(b, q - 1) - Rational(n - b) * f * scale(b, q)));
    vals.insert(scale(b, ell + 1) * (Rational(2) * f - inv_m));
    for (int k = 1; k <= q; ++k) vals.insert(s * f * scale(b, k));
  } else {
    throw std::logic_error("row_values: unknown row " + row);
  }
  return vals;
}

}  // namespace

FrequencyRow frequency_set(const ClosedFormContext& ctx, long long N) {
  if (N < 0) throw std::invalid_argument("frequency_set: N must be >= 0");
  FrequencyRow out;
  if (ctx.periodic) {
    out.row = "periodic";
    out.n = N;
    out.values.insert(Rational(1, ctx.m));
    return out;
  }
  if (N == 0 || N == 1) {
    out.row = N == 0 ? "N=0" : "N=1";
    out.n = N;
    out.values = row_values(ctx, out.row, N, 0);
    return out;
  }

  const long long b = ctx.b;
  long long v = 0, n0 = N;
  while (n0 % b == 0) {
    n0 /= b;
    ++v;
  }
  if (n0 == 1) {  // N = b^v, written as n = b with ell = v - 1
    n0 = b;
    --v;
  }
  if (n0 >= 2 && n0 <= 2 * b - 1) {
    out.row = n0 <= b ? "exact n in 2..b" : "exact n in b+1..2b-1";
    out.n = n0;
    out.ell = v;
    out.values = row_values(ctx, out.row, n0, v);
    return out;
  }

  // Strict rows: collect every admissible (n, ell), assert all give the same
  // value set, keep the representation with maximal ell.
  std::vector<FrequencyRow> hits;
  for (long long ell = 0, p = 1; 2 * p < N; ++ell, p *= b) {
    const long long n = N / p + 1;
    if (n < 3 || n > 2 * b) continue;
    if (!((n - 1) * p < N && N < n * p)) continue;
    FrequencyRow r;
    r.n = n;
    r.ell = ell;
    r.row = n == 2 * b            ? "strict n = 2b"
            : n <= b              ? "strict n in 3..b"
                                  : "strict n in b+1..2b-1";
    r.values = row_values(ctx, r.row, n, ell);
    hits.push_back(std::move(r));
  }
  if (hits.empty())
    throw std::logic_error("frequency_set: no table row matches N=" + std::to_string(N));
  for (const FrequencyRow& r : hits)
    if (r.values != hits.front().values)
      throw std::logic_error("frequency_set: admissible rows disagree at N=" +
                             std::to_string(N));
  return hits.back();
}

}  // namespace substfreq
