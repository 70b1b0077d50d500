#include <tourney/error.hpp>
#include <tourney/tournament.hpp>

#include <algorithm>

namespace tourney {

namespace {
    void check_vertex(const Tournament & t, int x)
    {
        if (x < 0 || x >= t.order())
            throw Error(Errc::out_of_range, "vertex " + std::to_string(x) + " not in 0.." + std::to_string(t.order() - 1));
    }
}

Tournament::Tournament(std::vector<std::uint64_t> out_masks) :
    out_(std::move(out_masks))
{
    const int n = order();
    if (n > max_order)
        throw Error(Errc::too_large, "order " + std::to_string(n) + " exceeds " + std::to_string(max_order));
    const std::uint64_t all = VertexSet::range(n).bits();
    for (int x = 0; x < n; ++x) {
        if (out_[x] & ~all)
            throw Error(Errc::out_of_range, "vertex " + std::to_string(x) + " has an arc leaving the vertex range");
        if ((out_[x] >> x) & 1)
            throw Error(Errc::self_pair, "vertex " + std::to_string(x) + " beats itself");
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool xy = (out_[x] >> y) & 1, yx = (out_[y] >> x) & 1;
            if (xy && yx)
                throw Error(Errc::conflicting_arc, "both orientations of {" + std::to_string(x) + "," + std::to_string(y) + "}");
            if (! xy && ! yx)
                throw Error(Errc::missing_pair, "pair {" + std::to_string(x) + "," + std::to_string(y) + "} is not oriented");
        }
}

Tournament make_tournament(int n, std::span<const std::pair<int, int>> arcs)
{
    if (n < 0)
        throw Error(Errc::out_of_range, "negative order " + std::to_string(n));
    if (n > max_order)
        throw Error(Errc::too_large, "order " + std::to_string(n) + " exceeds " + std::to_string(max_order));
    std::vector<std::uint64_t> out(n, 0);
    for (auto [x, y] : arcs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw Error(Errc::out_of_range, "arc (" + std::to_string(x) + "," + std::to_string(y) + ") outside 0.." + std::to_string(n - 1));
        if (x == y)
            throw Error(Errc::self_pair, "arc (" + std::to_string(x) + "," + std::to_string(x) + ")");
        if ((out[y] >> x) & 1)
            throw Error(Errc::conflicting_arc, "both orientations of {" + std::to_string(x) + "," + std::to_string(y) + "}");
        out[x] |= std::uint64_t{1} << y;
    }
    return Tournament(std::move(out));
}

bool has_arc(const Tournament & t, int x, int y)
{
    check_vertex(t, x);
    check_vertex(t, y);
    if (x == y)
        throw Error(Errc::self_pair, "has_arc(" + std::to_string(x) + "," + std::to_string(y) + ")");
    return t.beats(x, y);
}

Tournament dual(const Tournament & t)
{
    std::vector<std::uint64_t> out(t.order());
    for (int x = 0; x < t.order(); ++x)
        out[x] = t.in_neighbours(x).bits();
    return Tournament::from_masks_unchecked(std::move(out));
}

Subtournament subtournament(const Tournament & t, VertexSet x)
{
    if (! x.subset_of(t.vertices()))
        throw Error(Errc::out_of_range, "vertex set " + x.to_string() + " not inside 0.." + std::to_string(t.order() - 1));
    Subtournament result;
    result.labels = x.to_vector();
    const int k = static_cast<int>(result.labels.size());
    std::vector<std::uint64_t> out(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && t.beats(result.labels[i], result.labels[j]))
                out[i] |= std::uint64_t{1} << j;
    result.tournament = Tournament::from_masks_unchecked(std::move(out));
    return result;
}

Tournament remove_vertex(const Tournament & t, int x)
{
    check_vertex(t, x);
    return subtournament(t, t.vertices() - VertexSet::single(x)).tournament;
}

Tournament relabel(const Tournament & t, std::span<const int> image)
{
    const int n = t.order();
    if (static_cast<int>(image.size()) != n)
        throw Error(Errc::bad_size, "relabelling has " + std::to_string(image.size()) + " entries for order " + std::to_string(n));
    VertexSet seen;
    for (int v : image) {
        if (v < 0 || v >= n || seen.contains(v))
            throw Error(Errc::out_of_range, "relabelling is not a permutation of 0.." + std::to_string(n - 1));
        seen.insert(v);
    }
    std::vector<std::uint64_t> out(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b : t.out_neighbours(a))
            out[image[a]] |= std::uint64_t{1} << image[b];
    return Tournament::from_masks_unchecked(std::move(out));
}

int score(const Tournament & t, int x)
{
    check_vertex(t, x);
    return t.out_neighbours(x).size();
}

std::vector<int> score_sequence(const Tournament & t)
{
    std::vector<int> scores(t.order());
    for (int x = 0; x < t.order(); ++x)
        scores[x] = t.out_neighbours(x).size();
    std::sort(scores.begin(), scores.end());
    return scores;
}

bool is_regular(const Tournament & t)
{
    auto s = score_sequence(t);
    return s.empty() || s.front() == s.back();
}

bool is_transitive(const Tournament & t)
{
    // A tournament is transitive iff its scores are exactly 0..n-1.
    auto s = score_sequence(t);
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] != i)
            return false;
    return true;
}

std::string to_code(const Tournament & t)
{
    const int n = t.order();
    std::string code = std::to_string(n) + ":";
    code.reserve(code.size() + n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            code += t.beats(i, j) ? '1' : '0';
    return code;
}

Tournament parse_code(std::string_view code)
{
    auto colon = code.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw Error(Errc::parse_error, "expected n:bits, got '" + std::string(code) + "'");
    int n = 0;
    for (char c : code.substr(0, colon)) {
        if (c < '0' || c > '9')
            throw Error(Errc::parse_error, "bad vertex count in '" + std::string(code) + "'");
        n = n * 10 + (c - '0');
        if (n > max_order)
            throw Error(Errc::too_large, "order exceeds " + std::to_string(max_order));
    }
    auto bits = code.substr(colon + 1);
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (bits.size() != expected)
        throw Error(Errc::parse_error, "expected " + std::to_string(expected) + " bits for order " + std::to_string(n) + ", got " + std::to_string(bits.size()));
    std::size_t pos = 0;
    for (char c : bits)
        if (c != '0' && c != '1')
            throw Error(Errc::parse_error, "bit string may only contain 0 and 1");
    return Tournament::from_relation(n, [&](int, int) { return bits[pos++] == '1'; });
}

std::string to_dot(const Tournament & t, std::string_view name)
{
    std::string dot = "digraph \"" + std::string(name) + "\" {\n";
    for (int x = 0; x < t.order(); ++x)
        dot += "  " + std::to_string(x) + ";\n";
    for (int x = 0; x < t.order(); ++x)
        for (int y : t.out_neighbours(x))
            dot += "  " + std::to_string(x) + " -> " + std::to_string(y) + ";\n";
    dot += "}\n";
    return dot;
}

}
