// Shows the inverse-Cartan mod-1 matrices and the determinant predictions
// read off them for the exceptional algebras.

#include <iostream>

#include <adeq/adeq.hpp>

int main() {
    using namespace adeq;
    for (int rank : {6, 7, 8}) {
        auto a = algebra(Family::E, rank);
        std::cout << "[C^-1] mod 1 for " << label(a) << ":\n";
        auto m = mod1(inverse_cartan(a));
        for (int i = 0; i < rank; ++i) {
            std::cout << "  ";
            for (int j = 0; j < rank; ++j) std::cout << m(i, j) << " ";
            std::cout << "\n";
        }
        std::cout << "  nontrivial irrep determinants: ";
        for (const auto& x : determinant_prediction(a)) std::cout << root_of_unity_label(x) << " ";
        std::cout << "\n";
    }
    return 0;
}
