// Reference data for the classification: Table 1, the stable list, the
// full list of regular forms, the tree over D(1,1,1) and the constants
// used by the exclusion and witness checks.
#pragma once

#include <array>
#include <vector>

#include "tritri/arith.hpp"
#include "tritri/bounds.hpp"
#include "tritri/forms.hpp"

namespace tritri::golden {

inline const std::vector<BoundRow>& table1() {
    static const std::vector<BoundRow> rows = {
        {1, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {2, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {3, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {4, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {5, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {6, {2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {7, {2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {9, {2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1}},
        {19, {4, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1}},
        {20, {4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1}},
        {25, {4, 3, 4, 3, 2, 2, 2, 2, 1, 1, 1}},
        {26, {4, 4, 4, 3, 2, 2, 2, 2, 1, 1, 1}},
        {29, {6, 4, 4, 3, 3, 2, 2, 2, 1, 1, 1}},
        {32, {6, 5, 4, 3, 3, 2, 2, 2, 2, 2, 1}},
        {35, {6, 5, 4, 4, 3, 3, 2, 2, 2, 2, 1}},
        {41, {7, 5, 4, 4, 4, 3, 3, 2, 2, 2, 2}},
        {47, {8, 5, 4, 5, 4, 3, 3, 3, 2, 2, 2}},
        {49, {8, 5, 4, 5, 4, 3, 3, 3, 2, 2, 2}},
        {83, {13, 9, 7, 6, 7, 5, 5, 4, 3, 3, 3}},
        {314, {41, 29, 22, 16, 13, 11, 10, 12, 11, 11, 9}},
    };
    return rows;
}

inline std::vector<i64> table1_indices() {
    std::vector<i64> out;
    for (const auto& r : table1()) out.push_back(r.i);
    return out;
}

inline std::vector<TriForm> forms(std::initializer_list<Coeffs> list) {
    std::vector<TriForm> out;
    for (const auto& c : list) out.emplace_back(c);
    return out;
}

/// The stable regular forms, in the order they are numbered.
inline const std::vector<TriForm>& stable17() {
    static const auto v = forms({{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 2, 2}, {1, 1, 5},
                                 {1, 1, 6}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 1, 12}, {1, 3, 4},
                                 {2, 2, 3}, {1, 2, 10}, {1, 1, 21}, {1, 4, 6}, {1, 3, 10}});
    return v;
}

/// All regular forms, in the order they are numbered.
inline const std::vector<TriForm>& regular49() {
    static const auto v = forms({{1, 1, 1},  {1, 1, 2},  {1, 1, 3},   {1, 1, 4},  {1, 1, 5},  {1, 1, 6},
                                 {1, 2, 2},  {1, 2, 3},  {1, 2, 4},   {1, 1, 9},  {1, 3, 3},  {1, 2, 5},
                                 {1, 1, 12}, {1, 3, 4},  {2, 2, 3},   {1, 1, 18}, {1, 3, 6},  {2, 3, 3},
                                 {1, 2, 10}, {1, 1, 21}, {1, 4, 6},   {1, 5, 5},  {1, 3, 9},  {1, 3, 10},
                                 {1, 3, 12}, {1, 4, 9},  {1, 6, 6},   {3, 3, 4},  {1, 5, 10}, {1, 3, 18},
                                 {1, 6, 9},  {2, 3, 9},  {3, 3, 7},   {2, 3, 12}, {1, 3, 27}, {1, 9, 9},
                                 {1, 3, 30}, {2, 5, 10}, {1, 9, 12},  {2, 3, 18}, {1, 5, 25}, {3, 7, 7},
                                 {2, 5, 15}, {1, 6, 27}, {1, 9, 18},  {1, 9, 21}, {1, 21, 21}, {5, 6, 15},
                                 {3, 7, 63}});
    return v;
}

inline const std::vector<TriForm>& universal7() {
    static const auto v = forms({{1, 1, 1}, {1, 1, 2}, {1, 1, 4}, {1, 1, 5}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}});
    return v;
}

struct TreeNode {
    TriForm form;
    TriForm parent;
    i64 p;
    i64 counterexample;  // 0 when the form is regular
};

/// The part of the lambda tree lying over D(1,1,1).
inline const std::vector<TreeNode>& tree_over_111() {
    static const std::vector<TreeNode> v = {
        {{1, 1, 9}, {1, 1, 1}, 3, 0},     {{1, 9, 9}, {1, 1, 1}, 3, 0},
        {{1, 1, 81}, {1, 1, 9}, 3, 19},   {{1, 9, 81}, {1, 1, 9}, 3, 19},
        {{1, 81, 81}, {1, 9, 9}, 3, 19},  {{1, 1, 25}, {1, 1, 1}, 5, 5},
        {{1, 25, 25}, {1, 1, 1}, 5, 5},   {{1, 1, 49}, {1, 1, 1}, 7, 8},
        {{1, 49, 49}, {1, 1, 1}, 7, 8},
    };
    return v;
}

struct ExclusionBound {
    i64 a;
    i64 c_max;
};

inline const std::vector<ExclusionBound>& exclusion_bounds() {
    static const std::vector<ExclusionBound> v = {{10, 29}, {9, 26}, {8, 47}, {7, 41},
                                                  {6, 35},  {5, 49}, {4, 83}, {3, 314}};
    return v;
}

struct UkPair {
    i64 a;
    i64 k;
    i64 u_lower;
    i64 v_cap;
};

/// (a,k) pairs with the lower bound for u_k and the cap for v_k.
inline const std::vector<UkPair>& uk_pairs() {
    static const std::vector<UkPair> v = {{10, 5, 5, 3},   {9, 5, 5, 3},   {8, 7, 15, 7},   {7, 7, 11, 7},
                                          {6, 7, 8, 7},    {5, 9, 17, 14}, {4, 13, 31, 30}, {3, 29, 164, 161}};
    return v;
}

inline const std::vector<i64>& eset1() {
    static const std::vector<i64> v = {4 * 3, 4 * 7, 4 * 11, 4 * 19, 4 * 23, 4 * 31};
    return v;
}

inline const std::vector<i64>& eset2() {
    static const std::vector<i64> v = {69, 117, 141, 213, 285, 333};
    return v;
}

/// Forms where every representation of 8n + a + b + c is all-odd.
inline const std::vector<TriForm>& parity_forcing() {
    static const auto v = forms({{1, 1, 12}, {2, 2, 3}, {1, 2, 10}, {1, 1, 21}, {1, 4, 6}, {1, 1, 9},
                                 {1, 9, 9}, {1, 9, 12}, {2, 3, 18}, {1, 5, 25}, {3, 7, 63}});
    return v;
}

}  // namespace tritri::golden
