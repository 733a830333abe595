// Exhaustive scans over cyclotomic trace products.
#pragma once

#include "hyperk3/catalog.hpp"
#include "hyperk3/k3class.hpp"
#include "hyperk3/siegel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk3 {

enum class MultiplicityRule { sets_only, one_multiple_le3 };

// Multisets of CT indices (ascending) with total degree target.
// When allowed is nonempty only those indices are used.
std::vector<std::vector<long>> enumerate_ct_products(int target_degree, MultiplicityRule rule,
                                                     const std::vector<long>& allowed = {});

IntPoly ct_product(const std::vector<long>& ks);
std::string ks_string(const std::vector<long>& ks);

struct SearchEntry {
    std::string psi_label;
    std::vector<long> ks;
    K3Certificate cert;
    std::string st_label;  // y_i for R, x_i for Lehmer, counted from the top inside (-2,2)
    std::optional<std::string> dynkin;
    std::optional<IntPoly> chi1_tilde;
    std::optional<Int> trace_tilde;
    Verdict verdict = Verdict::indeterminate;
    QLabel q = QLabel::fixed_point;
};

// 1-based position of tau among the roots of its polynomial in (-2,2), largest first.
int position_from_top(const AlgebraicReal& tau);

std::vector<SearchEntry> scan_deg22(int r_index);
std::vector<SearchEntry> scan_deg22_all();
std::vector<SearchEntry> scan_lehmer(Side side);

void sort_canonical(std::vector<SearchEntry>& entries);

std::vector<CtEntry> list_ct_catalog();

// Worker count from HYPERK3_THREADS, else hardware concurrency.
unsigned worker_count();

}  // namespace hk3
