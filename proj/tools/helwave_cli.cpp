#include <iostream>

#include "helwave/helwave.hpp"

int main() {
    std::cout << "helwave cli placeholder\n";
    return 0;
}
