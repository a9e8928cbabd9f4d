#pragma once

// The committed special-function reference table: parsing and evaluation of
// one row with the library.

#include <complex>
#include <string>
#include <vector>

namespace hypmorse::oracle {

using cplx = std::complex<double>;

struct Row {
    std::string func;
    std::vector<cplx> args;  // each token "re:im"
    cplx value;
    int line = 0;
};

/// Parses the CSV text (header line "func,args,value_re,value_im"; lines
/// starting with '#' are comments).
std::vector<Row> parse(const std::string& csv);
std::vector<Row> load(const std::string& path);
/// The table compiled into the library.
std::vector<Row> builtin();

cplx evaluate(const Row& r);
/// Relative error, falling back to absolute near zero.
double rel_err(cplx got, cplx want);
/// Integer-order K rows carry the looser tolerance.
bool is_integer_order_k(const Row& r);

}  // namespace hypmorse::oracle
