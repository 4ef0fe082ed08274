#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xfc {

/// Subset of a declared universe [n] = {1, ..., n}, stored as a bitset.
///
/// Element labels are 1-based to match the [n] convention. The bitstring
/// form reads left to right as elements 1..n (leftmost character is
/// element 1, the least significant bit).
class VertexSet {
public:
    static constexpr int kUniverseCap = 4096;

    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, const std::vector<int>& elements);

    /// Parses a 0/1 string; universe size is the string length.
    static VertexSet from_bitstring(const std::string& bits);

    /// Subset encoded in the low bits of an integer (bit k = element k+1).
    static VertexSet from_index_bits(int universe, std::uint64_t bits);

    int universe() const { return universe_; }
    int size() const;
    bool empty() const { return size() == 0; }
    bool contains(int element) const;
    void add(int element);
    void remove(int element);

    bool subset_of(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;
    int intersection_size(const VertexSet& other) const;

    std::vector<int> elements() const;  // ascending
    std::string bitstring() const;

    bool operator==(const VertexSet& other) const;
    bool operator<(const VertexSet& other) const;  // by universe, then bits

private:
    void check_element(int element) const;
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace xfc
