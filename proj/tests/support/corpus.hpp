#pragma once

#include <vector>

#include "loops/cayley.hpp"

namespace loops::corpus {

// S3 as its own multiplication table (elements ordered e, r, r2, s, sr, sr2).
CayleyTable s3_table();
CayleyTable dihedral_table(int m);    // D_m, order 2m
CayleyTable quaternion8_table();
// A nonassociative loop of order 5 (the smallest nonassociative order).
CayleyTable nonassoc5_table();

// All group tables the tests sweep over (orders 1..16).
std::vector<CayleyTable> small_group_tables();

}  // namespace loops::corpus
