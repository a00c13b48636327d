#pragma once

#include <sstream>

#include <string>
#include <vector>

namespace manin {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass, first counterexample otherwise
};

/// Result of a verification suite: one line per axiom or condition checked.
struct Report {
    std::string subject;
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        items.push_back({name, pass, pass ? "" : witness});
    }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& it : other.items)
            items.push_back({prefix.empty() ? it.name : prefix + "." + it.name, it.pass, it.witness});
    }
    bool passed() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    bool item_passed(const std::string& name) const {
        for (const auto& it : items)
            if (it.name == name) return it.pass;
        return false;
    }
};


inline std::string index_witness(std::initializer_list<std::size_t> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace manin
