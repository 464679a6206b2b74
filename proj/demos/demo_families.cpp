// Print the family counts of every registered classification case.

#include <evoalg/classify.hpp>

#include <iostream>

using namespace evoalg;

int main() {
    for (const CaseInfo& info : case_registry()) {
        if (info.label == "grid") {
            GridClassification g = classify_grid();
            std::cout << "grid: " << g.starred << " starred of " << g.cells.size() << " cells\n";
            continue;
        }
        if (info.label == "5.1.1") {
            TypeClassification tc = classify_condition_323();
            std::cout << "5.1.1: " << tc.distinct_types << " types over " << tc.entries.size()
                      << " matrices\n";
            continue;
        }
        FamilySet fs = classify_case(info.label);
        std::cout << info.label << ": " << fs.count() << " families";
        if (info.stated_count) std::cout << " (stated " << *info.stated_count << ")";
        std::cout << "\n";
    }
    return 0;
}
