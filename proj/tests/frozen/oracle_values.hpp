// Generated by hopfkit_freeze_oracles from the integer oracles. Do not edit.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopfkit::frozen {

struct CartanCase {
  std::string type;
  std::vector<std::vector<int>> cartan;
  std::vector<int> symmetrizer;
  std::size_t positive_roots;
};

struct ValueCase {
  std::string type;
  std::vector<int> key;
  std::uint64_t value;
};

struct WeightCase {
  std::string type;
  std::vector<int> m;
  std::vector<std::pair<std::vector<int>, std::uint64_t>> multiplicities;  // keyed by gamma
};

struct TensorCase {
  std::string type;
  std::vector<int> m1, m2;
  std::vector<std::pair<std::vector<int>, std::uint64_t>> summands;
};

struct ClebschGordanCase {
  int m, n;
  std::vector<int> highest;
};

inline const std::vector<CartanCase> kCartan{
    {"A1", {{2}}, {1}, 1},
    {"A2", {{2, -1}, {-1, 2}}, {1, 1}, 3},
    {"B2", {{2, -1}, {-2, 2}}, {2, 1}, 4},
    {"G2", {{2, -1}, {-3, 2}}, {3, 1}, 6},
    {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, 6},
    {"B3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, {2, 2, 1}, 9},
    {"C3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, {1, 1, 2}, 9},
    {"D4", {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}, {1, 1, 1, 1}, 12},
    {"F4", {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}, {2, 2, 1, 1}, 24},
};

/// Kostant partition numbers for |alpha| <= 8.
inline const std::vector<ValueCase> kKostant{
    {"A1", {0}, 1},
    {"A1", {1}, 1},
    {"A1", {2}, 1},
    {"A1", {3}, 1},
    {"A1", {4}, 1},
    {"A1", {5}, 1},
    {"A1", {6}, 1},
    {"A1", {7}, 1},
    {"A1", {8}, 1},
    {"A2", {0, 0}, 1},
    {"A2", {0, 1}, 1},
    {"A2", {0, 2}, 1},
    {"A2", {0, 3}, 1},
    {"A2", {0, 4}, 1},
    {"A2", {0, 5}, 1},
    {"A2", {0, 6}, 1},
    {"A2", {0, 7}, 1},
    {"A2", {0, 8}, 1},
    {"A2", {1, 0}, 1},
    {"A2", {1, 1}, 2},
    {"A2", {1, 2}, 2},
    {"A2", {1, 3}, 2},
    {"A2", {1, 4}, 2},
    {"A2", {1, 5}, 2},
    {"A2", {1, 6}, 2},
    {"A2", {1, 7}, 2},
    {"A2", {2, 0}, 1},
    {"A2", {2, 1}, 2},
    {"A2", {2, 2}, 3},
    {"A2", {2, 3}, 3},
    {"A2", {2, 4}, 3},
    {"A2", {2, 5}, 3},
    {"A2", {2, 6}, 3},
    {"A2", {3, 0}, 1},
    {"A2", {3, 1}, 2},
    {"A2", {3, 2}, 3},
    {"A2", {3, 3}, 4},
    {"A2", {3, 4}, 4},
    {"A2", {3, 5}, 4},
    {"A2", {4, 0}, 1},
    {"A2", {4, 1}, 2},
    {"A2", {4, 2}, 3},
    {"A2", {4, 3}, 4},
    {"A2", {4, 4}, 5},
    {"A2", {5, 0}, 1},
    {"A2", {5, 1}, 2},
    {"A2", {5, 2}, 3},
    {"A2", {5, 3}, 4},
    {"A2", {6, 0}, 1},
    {"A2", {6, 1}, 2},
    {"A2", {6, 2}, 3},
    {"A2", {7, 0}, 1},
    {"A2", {7, 1}, 2},
    {"A2", {8, 0}, 1},
    {"B2", {0, 0}, 1},
    {"B2", {0, 1}, 1},
    {"B2", {0, 2}, 1},
    {"B2", {0, 3}, 1},
    {"B2", {0, 4}, 1},
    {"B2", {0, 5}, 1},
    {"B2", {0, 6}, 1},
    {"B2", {0, 7}, 1},
    {"B2", {0, 8}, 1},
    {"B2", {1, 0}, 1},
    {"B2", {1, 1}, 2},
    {"B2", {1, 2}, 3},
    {"B2", {1, 3}, 3},
    {"B2", {1, 4}, 3},
    {"B2", {1, 5}, 3},
    {"B2", {1, 6}, 3},
    {"B2", {1, 7}, 3},
    {"B2", {2, 0}, 1},
    {"B2", {2, 1}, 2},
    {"B2", {2, 2}, 4},
    {"B2", {2, 3}, 5},
    {"B2", {2, 4}, 6},
    {"B2", {2, 5}, 6},
    {"B2", {2, 6}, 6},
    {"B2", {3, 0}, 1},
    {"B2", {3, 1}, 2},
    {"B2", {3, 2}, 4},
    {"B2", {3, 3}, 6},
    {"B2", {3, 4}, 8},
    {"B2", {3, 5}, 9},
    {"B2", {4, 0}, 1},
    {"B2", {4, 1}, 2},
    {"B2", {4, 2}, 4},
    {"B2", {4, 3}, 6},
    {"B2", {4, 4}, 9},
    {"B2", {5, 0}, 1},
    {"B2", {5, 1}, 2},
    {"B2", {5, 2}, 4},
    {"B2", {5, 3}, 6},
    {"B2", {6, 0}, 1},
    {"B2", {6, 1}, 2},
    {"B2", {6, 2}, 4},
    {"B2", {7, 0}, 1},
    {"B2", {7, 1}, 2},
    {"B2", {8, 0}, 1},
};

/// Weyl dimensions of L(m).
inline const std::vector<ValueCase> kWeyl{
    {"A1", {0}, 1},
    {"A1", {1}, 2},
    {"A1", {2}, 3},
    {"A1", {3}, 4},
    {"A1", {4}, 5},
    {"A1", {5}, 6},
    {"A1", {6}, 7},
    {"A1", {7}, 8},
    {"A1", {8}, 9},
    {"A1", {9}, 10},
    {"A1", {10}, 11},
    {"A2", {0, 0}, 1},
    {"A2", {0, 1}, 3},
    {"A2", {0, 2}, 6},
    {"A2", {1, 0}, 3},
    {"A2", {1, 1}, 8},
    {"A2", {1, 2}, 15},
    {"A2", {2, 0}, 6},
    {"A2", {2, 1}, 15},
    {"A2", {2, 2}, 27},
    {"B2", {0, 0}, 1},
    {"B2", {0, 1}, 4},
    {"B2", {0, 2}, 10},
    {"B2", {1, 0}, 5},
    {"B2", {1, 1}, 16},
    {"B2", {2, 0}, 14},
    {"G2", {1, 0}, 14},
    {"G2", {0, 1}, 7},
    {"G2", {1, 1}, 64},
};

/// Freudenthal multiplicities of the weight lambda - sum gamma_i alpha_i.
inline const std::vector<WeightCase> kFreudenthal{
    {"A1", {0}, {{{0}, 1}}},
    {"A1", {1}, {{{0}, 1}, {{1}, 1}}},
    {"A1", {2}, {{{0}, 1}, {{1}, 1}, {{2}, 1}}},
    {"A1", {3}, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}}},
    {"A1", {4}, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}}},
    {"A1", {5}, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}, {{5}, 1}}},
    {"A1", {6}, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}, {{5}, 1}, {{6}, 1}}},
    {"A1", {7}, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}, {{5}, 1}, {{6}, 1}, {{7}, 1}}},
    {"A1", {8}, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}, {{5}, 1}, {{6}, 1}, {{7}, 1}, {{8}, 1}}},
    {"A1", {9}, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}, {{5}, 1}, {{6}, 1}, {{7}, 1}, {{8}, 1}, {{9}, 1}}},
    {"A1", {10}, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}, {{5}, 1}, {{6}, 1}, {{7}, 1}, {{8}, 1}, {{9}, 1}, {{10}, 1}}},
    {"A2", {0, 0}, {{{0, 0}, 1}}},
    {"A2", {0, 1}, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}},
    {"A2", {0, 2}, {{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}}},
    {"A2", {1, 0}, {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}}},
    {"A2", {1, 1}, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 2}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}}},
    {"A2", {1, 2}, {{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{1, 0}, 1}, {{1, 1}, 2}, {{1, 2}, 2}, {{1, 3}, 1}, {{2, 1}, 1}, {{2, 2}, 2}, {{2, 3}, 1}, {{3, 2}, 1}, {{3, 3}, 1}}},
    {"A2", {2, 0}, {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{2, 0}, 1}, {{2, 1}, 1}, {{2, 2}, 1}}},
    {"A2", {2, 1}, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 2}, {{1, 2}, 1}, {{2, 0}, 1}, {{2, 1}, 2}, {{2, 2}, 2}, {{2, 3}, 1}, {{3, 1}, 1}, {{3, 2}, 1}, {{3, 3}, 1}}},
    {"A2", {2, 2}, {{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{1, 0}, 1}, {{1, 1}, 2}, {{1, 2}, 2}, {{1, 3}, 1}, {{2, 0}, 1}, {{2, 1}, 2}, {{2, 2}, 3}, {{2, 3}, 2}, {{2, 4}, 1}, {{3, 1}, 1}, {{3, 2}, 2}, {{3, 3}, 2}, {{3, 4}, 1}, {{4, 2}, 1}, {{4, 3}, 1}, {{4, 4}, 1}}},
    {"B2", {0, 0}, {{{0, 0}, 1}}},
    {"B2", {0, 1}, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{1, 2}, 1}}},
    {"B2", {0, 2}, {{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{1, 1}, 1}, {{1, 2}, 2}, {{1, 3}, 1}, {{2, 2}, 1}, {{2, 3}, 1}, {{2, 4}, 1}}},
    {"B2", {1, 0}, {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}}},
    {"B2", {1, 1}, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 2}, {{1, 2}, 2}, {{1, 3}, 1}, {{2, 1}, 1}, {{2, 2}, 2}, {{2, 3}, 2}, {{2, 4}, 1}, {{3, 3}, 1}, {{3, 4}, 1}}},
    {"B2", {2, 0}, {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 0}, 1}, {{2, 1}, 1}, {{2, 2}, 2}, {{2, 3}, 1}, {{2, 4}, 1}, {{3, 2}, 1}, {{3, 3}, 1}, {{3, 4}, 1}, {{4, 4}, 1}}},
};

/// Simple summands of L(m1) (x) L(m2).
inline const std::vector<TensorCase> kTensor{
    {"A1", {0}, {0}, {{{0}, 1}}},
    {"A1", {0}, {1}, {{{1}, 1}}},
    {"A1", {0}, {2}, {{{2}, 1}}},
    {"A1", {0}, {3}, {{{3}, 1}}},
    {"A1", {0}, {4}, {{{4}, 1}}},
    {"A1", {1}, {0}, {{{1}, 1}}},
    {"A1", {1}, {1}, {{{0}, 1}, {{2}, 1}}},
    {"A1", {1}, {2}, {{{1}, 1}, {{3}, 1}}},
    {"A1", {1}, {3}, {{{2}, 1}, {{4}, 1}}},
    {"A1", {1}, {4}, {{{3}, 1}, {{5}, 1}}},
    {"A1", {2}, {0}, {{{2}, 1}}},
    {"A1", {2}, {1}, {{{1}, 1}, {{3}, 1}}},
    {"A1", {2}, {2}, {{{0}, 1}, {{2}, 1}, {{4}, 1}}},
    {"A1", {2}, {3}, {{{1}, 1}, {{3}, 1}, {{5}, 1}}},
    {"A1", {2}, {4}, {{{2}, 1}, {{4}, 1}, {{6}, 1}}},
    {"A1", {3}, {0}, {{{3}, 1}}},
    {"A1", {3}, {1}, {{{2}, 1}, {{4}, 1}}},
    {"A1", {3}, {2}, {{{1}, 1}, {{3}, 1}, {{5}, 1}}},
    {"A1", {3}, {3}, {{{0}, 1}, {{2}, 1}, {{4}, 1}, {{6}, 1}}},
    {"A1", {3}, {4}, {{{1}, 1}, {{3}, 1}, {{5}, 1}, {{7}, 1}}},
    {"A1", {4}, {0}, {{{4}, 1}}},
    {"A1", {4}, {1}, {{{3}, 1}, {{5}, 1}}},
    {"A1", {4}, {2}, {{{2}, 1}, {{4}, 1}, {{6}, 1}}},
    {"A1", {4}, {3}, {{{1}, 1}, {{3}, 1}, {{5}, 1}, {{7}, 1}}},
    {"A1", {4}, {4}, {{{0}, 1}, {{2}, 1}, {{4}, 1}, {{6}, 1}, {{8}, 1}}},
    {"A2", {1, 0}, {0, 1}, {{{0, 0}, 1}, {{1, 1}, 1}}},
    {"A2", {1, 0}, {1, 0}, {{{0, 1}, 1}, {{2, 0}, 1}}},
    {"A2", {1, 1}, {1, 0}, {{{0, 2}, 1}, {{1, 0}, 1}, {{2, 1}, 1}}},
    {"B2", {1, 0}, {0, 1}, {{{0, 1}, 1}, {{1, 1}, 1}}},
    {"B2", {0, 1}, {0, 1}, {{{0, 0}, 1}, {{0, 2}, 1}, {{1, 0}, 1}}},
};

inline const std::vector<ClebschGordanCase> kClebschGordan{
    {0, 0, {0}},
    {0, 1, {1}},
    {0, 2, {2}},
    {0, 3, {3}},
    {0, 4, {4}},
    {1, 0, {1}},
    {1, 1, {2, 0}},
    {1, 2, {3, 1}},
    {1, 3, {4, 2}},
    {1, 4, {5, 3}},
    {2, 0, {2}},
    {2, 1, {3, 1}},
    {2, 2, {4, 2, 0}},
    {2, 3, {5, 3, 1}},
    {2, 4, {6, 4, 2}},
    {3, 0, {3}},
    {3, 1, {4, 2}},
    {3, 2, {5, 3, 1}},
    {3, 3, {6, 4, 2, 0}},
    {3, 4, {7, 5, 3, 1}},
    {4, 0, {4}},
    {4, 1, {5, 3}},
    {4, 2, {6, 4, 2}},
    {4, 3, {7, 5, 3, 1}},
    {4, 4, {8, 6, 4, 2, 0}},
};

}  // namespace hopfkit::frozen
