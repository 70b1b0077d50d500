#include <tourney/canonical.hpp>
#include <tourney/detail/canonicalizer.hpp>
#include <tourney/error.hpp>

#include <bit>

namespace tourney {

namespace detail {

void Canonicalizer::run(std::span<const std::uint64_t> out)
{
    n_ = static_cast<int>(out.size());
    out_ = out.data();
    const std::size_t n = static_cast<std::size_t>(n_);
    if (cells_.size() < (n + 1) * (n + 1)) {
        cells_.resize((n + 1) * (n + 1));
        cell_count_.resize(n + 1);
    }
    cur_rows_.assign(n, 0);
    best_rows_.assign(n, 0);
    cur_perm_.assign(n, 0);
    best_perm_.assign(n, 0);
    have_best_ = false;
    automorphisms_ = 0;
    last_orbit_ = 0;

    if (n_ == 0) {
        automorphisms_ = 1;
        return;
    }
    cells_[0] = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    cell_count_[0] = 1;
    search(0, false);
}

void Canonicalizer::search(int depth, bool equal)
{
    if (depth == n_) {
        const std::uint64_t last = std::uint64_t{1} << cur_perm_[n_ - 1];
        if (have_best_ && equal) {
            ++automorphisms_;
            last_orbit_ |= last;
        }
        else {
            best_rows_ = cur_rows_;
            best_perm_ = cur_perm_;
            have_best_ = true;
            automorphisms_ = 1;
            last_orbit_ = last;
        }
        return;
    }

    const std::size_t stride = static_cast<std::size_t>(n_) + 1;
    const std::uint64_t * cells = &cells_[depth * stride];
    const int count = cell_count_[depth];

    std::uint64_t candidate_rows[64];
    std::uint64_t best_row = ~std::uint64_t{0};
    for (std::uint64_t rest = cells[0]; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const std::uint64_t beats = out_[v];
        std::uint64_t row = 0;
        for (int c = 0; c < count; ++c) {
            std::uint64_t cell = cells[c];
            if (c == 0)
                cell &= ~(std::uint64_t{1} << v);
            const int size = std::popcount(cell);
            const int ones = std::popcount(cell & beats);
            row = size == 64 ? 0 : row << size;
            row |= (std::uint64_t{1} << ones) - 1;
        }
        candidate_rows[v] = row;
        if (row < best_row)
            best_row = row;
    }

    if (have_best_ && equal) {
        if (best_row > best_rows_[depth])
            return;
        if (best_row < best_rows_[depth])
            equal = false;
    }
    else
        equal = false;

    std::uint64_t * child = &cells_[(depth + 1) * stride];
    for (std::uint64_t rest = cells[0]; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (candidate_rows[v] != best_row)
            continue;
        const std::uint64_t beats = out_[v];
        int child_count = 0;
        for (int c = 0; c < count; ++c) {
            std::uint64_t cell = cells[c];
            if (c == 0)
                cell &= ~(std::uint64_t{1} << v);
            if (const std::uint64_t losers = cell & ~beats)
                child[child_count++] = losers;
            if (const std::uint64_t winners = cell & beats)
                child[child_count++] = winners;
        }
        cell_count_[depth + 1] = child_count;
        cur_rows_[depth] = best_row;
        cur_perm_[depth] = v;
        search(depth + 1, equal);
        // Whatever happened below, the incumbent now shares this prefix.
        equal = true;
    }
}

std::uint64_t Canonicalizer::packed() const noexcept
{
    std::uint64_t key = 0;
    for (int d = 0; d < n_; ++d)
        key = (key << (n_ - 1 - d)) | best_rows_[d];
    return key;
}

std::vector<std::uint64_t> unpack_rows(int n, std::uint64_t key)
{
    std::vector<std::uint64_t> rows(n, 0);
    for (int d = n - 1; d >= 0; --d) {
        const int width = n - 1 - d;
        rows[d] = width == 0 ? 0 : key & ((std::uint64_t{1} << width) - 1);
        key = width == 0 ? key : key >> width;
    }
    return rows;
}

std::vector<std::uint64_t> masks_from_rows(int n, std::span<const std::uint64_t> rows)
{
    std::vector<std::uint64_t> out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int shift = n - 1 - j;
            if ((rows[i] >> shift) & 1)
                out[i] |= std::uint64_t{1} << j;
            else
                out[j] |= std::uint64_t{1} << i;
        }
    return out;
}

}

std::string CanonicalCode::to_string() const
{
    std::string code = std::to_string(n_) + ":";
    for (int d = 0; d < n_; ++d)
        for (int shift = n_ - 2 - d; shift >= 0; --shift)
            code += ((rows_[d] >> shift) & 1) ? '1' : '0';
    return code;
}

Tournament CanonicalCode::tournament() const
{
    return Tournament::from_masks_unchecked(detail::masks_from_rows(n_, rows_));
}

std::optional<std::uint64_t> CanonicalCode::packed() const
{
    if (n_ > 11)
        return std::nullopt;
    std::uint64_t key = 0;
    for (int d = 0; d < n_; ++d)
        key = (key << (n_ - 1 - d)) | rows_[d];
    return key;
}

CanonicalCode CanonicalCode::from_packed(int n, std::uint64_t key)
{
    if (n < 0 || n > 11)
        throw Error(Errc::too_large, "packed codes hold at most 11 vertices");
    return CanonicalCode(n, detail::unpack_rows(n, key));
}

CanonicalForm canonical_form(const Tournament & t)
{
    detail::Canonicalizer c;
    c.run(t.out_masks());
    CanonicalForm form;
    form.code = CanonicalCode(t.order(), {c.rows().begin(), c.rows().end()});
    form.labelling.assign(c.labelling().begin(), c.labelling().end());
    form.automorphisms = c.automorphisms();
    return form;
}

CanonicalCode canonical_code(const Tournament & t)
{
    return canonical_form(t).code;
}

std::uint64_t automorphism_count(const Tournament & t)
{
    detail::Canonicalizer c;
    c.run(t.out_masks());
    return c.automorphisms();
}

bool are_isomorphic(const Tournament & a, const Tournament & b)
{
    if (a.order() != b.order() || score_sequence(a) != score_sequence(b))
        return false;
    return canonical_code(a) == canonical_code(b);
}

std::optional<std::vector<int>> find_isomorphism(const Tournament & a, const Tournament & b)
{
    if (a.order() != b.order())
        return std::nullopt;
    auto fa = canonical_form(a), fb = canonical_form(b);
    if (fa.code != fb.code)
        return std::nullopt;
    // a's vertex at position i and b's vertex at position i play the same role.
    std::vector<int> f(a.order());
    for (int i = 0; i < a.order(); ++i)
        f[fa.labelling[i]] = fb.labelling[i];
    return f;
}

}
