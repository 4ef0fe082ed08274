#include "xfc/vertexset.hpp"

#include <bit>

#include "xfc/errors.hpp"

namespace xfc {

VertexSet::VertexSet(int universe) : universe_(universe) {
    if (universe < 0 || universe > kUniverseCap)
        throw InstanceTooLarge("VertexSet universe " + std::to_string(universe) +
                               " outside [0, " + std::to_string(kUniverseCap) + "]");
    words_.assign((universe + 63) / 64, 0);
}

VertexSet::VertexSet(int universe, const std::vector<int>& elements) : VertexSet(universe) {
    for (int e : elements) add(e);
}

VertexSet VertexSet::from_bitstring(const std::string& bits) {
    VertexSet s(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            s.add(static_cast<int>(i) + 1);
        else if (bits[i] != '0')
            throw ParseError("bitstring may contain only 0/1: '" + bits + "'");
    }
    return s;
}

VertexSet VertexSet::from_index_bits(int universe, std::uint64_t bits) {
    if (universe > 64) throw InstanceTooLarge("from_index_bits limited to universe 64");
    VertexSet s(universe);
    for (int e = 1; e <= universe; ++e)
        if (bits & (1ull << (e - 1))) s.add(e);
    return s;
}

void VertexSet::check_element(int element) const {
    if (element < 1 || element > universe_)
        throw Error("element " + std::to_string(element) + " outside universe [" +
                    std::to_string(universe_) + "]");
}

int VertexSet::size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::contains(int element) const {
    if (element < 1 || element > universe_) return false;
    int i = element - 1;
    return (words_[i / 64] >> (i % 64)) & 1;
}

void VertexSet::add(int element) {
    check_element(element);
    int i = element - 1;
    words_[i / 64] |= 1ull << (i % 64);
}

void VertexSet::remove(int element) {
    check_element(element);
    int i = element - 1;
    words_[i / 64] &= ~(1ull << (i % 64));
}

bool VertexSet::subset_of(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw DimensionMismatch("subset_of across different universes");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw DimensionMismatch("intersect across different universes");
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] & other.words_[i];
    return out;
}

int VertexSet::intersection_size(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw DimensionMismatch("intersection_size across different universes");
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

std::vector<int> VertexSet::elements() const {
    std::vector<int> out;
    for (int e = 1; e <= universe_; ++e)
        if (contains(e)) out.push_back(e);
    return out;
}

std::string VertexSet::bitstring() const {
    std::string s(static_cast<std::size_t>(universe_), '0');
    for (int e = 1; e <= universe_; ++e)
        if (contains(e)) s[e - 1] = '1';
    return s;
}

bool VertexSet::operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
}

bool VertexSet::operator<(const VertexSet& other) const {
    if (universe_ != other.universe_) return universe_ < other.universe_;
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
    return false;
}

}  // namespace xfc
