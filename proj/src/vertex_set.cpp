#include <tourney/vertex_set.hpp>

namespace tourney {

VertexSet::VertexSet(std::initializer_list<int> members)
{
    for (int v : members)
        insert(v);
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> result;
    result.reserve(size());
    for (int v : *this)
        result.push_back(v);
    return result;
}

std::string VertexSet::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
        if (! first)
            s += ',';
        s += std::to_string(v);
        first = false;
    }
    s += '}';
    return s;
}

}
