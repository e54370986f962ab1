// Prints the counting series of a few algebras by every applicable method,
// as a quick demonstration that they coincide.

#include <iostream>

#include <adeq/adeq.hpp>

int main() {
    using namespace adeq;
    for (const auto& a : {algebra(Family::A, 1), algebra(Family::A, 2), algebra(Family::D, 4)}) {
        std::cout << label(a) << "\n";
        std::cout << "  brute : ";
        auto brute = ehrhart_series_bruteforce(a, 8);
        for (int t = 0; t <= 8; ++t) std::cout << brute.coeff(t) << " ";
        std::cout << "\n  omega : ";
        auto om = ehrhart_series_omega(a, 8);
        for (int t = 0; t <= 8; ++t) std::cout << om.coeff(t) << " ";
        std::cout << "\n  reps  : ";
        auto reps = rep_series(a, 8);
        for (int t = 0; t <= 8; ++t) std::cout << reps.coeff(t) << " ";
        std::cout << "\n";
    }
    return 0;
}
