#include "qmds/code.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qmds/subsystem.hpp"

namespace qmds {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::vector<std::size_t> to_columns(const std::vector<std::size_t>& one_based) {
  std::vector<std::size_t> cols;
  for (std::size_t i : one_based) cols.push_back(i - 1);
  return cols;
}

std::vector<FieldElement> checked_alphas(const CodeParams& params, const Field& field,
                                         const std::vector<std::int64_t>& raw) {
  if (raw.size() != params.n)
    throw InvalidCode("alphas must have n = " + std::to_string(params.n) + " entries (got " +
                      std::to_string(raw.size()) + ")");
  std::vector<FieldElement> out;
  for (std::int64_t v : raw) {
    if (v < 0 || v >= static_cast<std::int64_t>(params.q))
      throw InvalidCode("alpha " + std::to_string(v) + " is not an element of GF(" +
                        std::to_string(params.q) + ")");
    out.emplace_back(field, static_cast<std::uint32_t>(v));
  }
  return out;
}

}  // namespace

void CodeParams::validate() const {
  if (k < 1) throw InvalidCode("k must be >= 1");
  if (d < 2) throw InvalidCode("d must be >= 2");
  if (n != k + 2 * (d - 1))
    throw InvalidCode("n must equal k+2(d-1) (n=" + std::to_string(n) +
                      ", k+2(d-1)=" + std::to_string(k + 2 * (d - 1)) + ")");
  if (!is_prime(q)) throw InvalidCode("q must be prime (q=" + std::to_string(q) + ")");
  if (q < n)
    throw InvalidCode("q must be >= n (q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")");
}

std::uint32_t default_field_size(std::size_t n) { return next_prime(static_cast<std::uint32_t>(n)); }

QuantumMdsCode::QuantumMdsCode(const CodeParams& params, std::vector<FieldElement> alphas)
    : params_(params),
      field_(params.q),
      alphas_(std::move(alphas)),
      ab_(field_, params.message_dim(), params.n),
      generator_(field_, params.message_dim(), params.num_registers()) {
  const std::size_t m = params_.message_dim();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < params_.n; ++i)
      ab_.set(r, i, pow(alphas_[i], m - 1 - r));
  std::vector<std::size_t> r_block(params_.k);
  for (std::size_t c = 0; c < params_.k; ++c) r_block[c] = c;
  generator_ = hconcat(MatrixGF::identity(field_, m).columns(r_block), ab_);
}

QuantumMdsCode QuantumMdsCode::construct(const CodeParams& params,
                                         std::optional<std::vector<std::int64_t>> alphas) {
  params.validate();
  Field field(params.q);
  std::vector<std::int64_t> raw;
  if (alphas) {
    raw = *alphas;
  } else {
    for (std::size_t i = 0; i < params.n; ++i) raw.push_back(static_cast<std::int64_t>(i));
  }
  auto elems = checked_alphas(params, field, raw);
  std::set<std::int64_t> seen(raw.begin(), raw.end());
  if (seen.size() != raw.size()) throw InvalidCode("alphas must be distinct elements of GF(q)");
  return QuantumMdsCode(params, std::move(elems));
}

QuantumMdsCode QuantumMdsCode::unchecked(const CodeParams& params, std::vector<std::int64_t> alphas) {
  params.validate();
  Field field(params.q);
  return QuantumMdsCode(params, checked_alphas(params, field, alphas));
}

ErasureBlocks erasure_submatrices(const QuantumMdsCode& code, std::vector<std::size_t> surviving) {
  const auto& p = code.params();
  const std::size_t need = p.n - (p.d - 1);
  std::sort(surviving.begin(), surviving.end());
  if (std::adjacent_find(surviving.begin(), surviving.end()) != surviving.end())
    throw std::invalid_argument("duplicate index in surviving set");
  for (std::size_t i : surviving)
    if (i < 1 || i > p.n)
      throw std::out_of_range("surviving index " + std::to_string(i) + " outside 1.." +
                              std::to_string(p.n));
  if (surviving.size() != need)
    throw std::invalid_argument("surviving set must have n-(d-1) = " + std::to_string(need) +
                                " indices (got " + std::to_string(surviving.size()) + ")");

  ErasureBlocks blocks{surviving, {}, code.ab().columns(to_columns(surviving)), code.ab()};
  for (std::size_t i = 1; i <= p.n; ++i)
    if (!std::binary_search(surviving.begin(), surviving.end(), i)) blocks.erased.push_back(i);
  blocks.erased_block = code.ab().columns(to_columns(blocks.erased));

  const std::size_t r1 = rank(blocks.surviving_block);
  if (r1 != need) throw SingularMatrix(need, r1);
  const MatrixGF b_erased = blocks.erased_block.row_block(p.k, p.d - 1);
  const std::size_t r2 = rank(b_erased);
  if (r2 != p.d - 1) throw SingularMatrix(p.d - 1, r2);
  return blocks;
}

Report validate(const QuantumMdsCode& code) {
  const auto& p = code.params();
  const std::size_t m = p.message_dim();
  Report report;

  auto& distinct = report.add("alphas distinct");
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = i + 1; j < p.n; ++j)
      distinct.expect(code.alphas()[i] != code.alphas()[j],
                      "alpha_" + std::to_string(i + 1) + " = alpha_" + std::to_string(j + 1) +
                          " = " + to_string(code.alphas()[i]));

  auto& rows = report.add("Vandermonde row powers");
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < p.n; ++i)
      rows.expect(code.ab().at(r, i) == pow(code.alphas()[i], m - 1 - r),
                  "entry (" + std::to_string(r) + "," + std::to_string(i) + ")");

  report.add("rank(AB) = k+d-1").expect(rank(code.ab()) == m, "rank(AB) = " + std::to_string(rank(code.ab())));

  auto& square = report.add("square (k+d-1)-column submatrices of AB invertible");
  for (const auto& cols : combinations(p.n, m)) {
    std::size_t r = rank(code.ab().columns(to_columns(cols)));
    square.expect(r == m, "columns {" + join(cols) + "} rank " + std::to_string(r));
  }

  auto& bsub = report.add("(d-1)-column submatrices of B invertible");
  const MatrixGF b = code.b();
  for (const auto& cols : combinations(p.n, p.d - 1)) {
    std::size_t r = rank(b.columns(to_columns(cols)));
    bsub.expect(r == p.d - 1, "columns {" + join(cols) + "} rank " + std::to_string(r));
  }

  auto& rblock = report.add("R block is e_1..e_k");
  for (std::size_t c = 0; c < p.k; ++c)
    for (std::size_t r = 0; r < m; ++r)
      rblock.expect(code.generator()(r, c) == (r == c ? 1U : 0U),
                    "G(" + std::to_string(r) + "," + std::to_string(c) + ")");

  report.add("rank(G) = k+d-1")
      .expect(rank(code.generator()) == m, "rank(G) = " + std::to_string(rank(code.generator())));
  return report;
}

}  // namespace qmds
