#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acc/rng.hpp"

namespace acc {

enum LendType : int {
    kBookType = 1,
    kPeriodicalType = 2,
    kEbookType = 3,
    kDiscType = 4,
};

// borrower is -1 or the id of the patron holding the item. num_pages is
// meaningful for printed types, author for books.
struct LendItem {
    int id = 0;
    int type_code = kBookType;
    int borrower = -1;
    int num_pages = 0;
    std::string author;
    std::string name;
};

struct LendPatron {
    int id = 0;
    int item = -1; // -1 or the id of the single item on loan
};

// Fixed slots; removing an entry vacates its slot but ids keep counting up,
// so an id is never reused. The standing invariant is cross-reference
// symmetry: item.borrower == p.id exactly when p.item == item.id.
struct Registry {
    std::vector<std::optional<LendItem>> item_slots;
    std::vector<std::optional<LendPatron>> patron_slots;
    int next_item_id = 1000;
    int next_patron_id = 1000;

    Registry() = default;
    Registry(int item_capacity, int patron_capacity)
        : item_slots(static_cast<size_t>(item_capacity)),
          patron_slots(static_cast<size_t>(patron_capacity)) {}
};

inline int find_item(const Registry& r, int id) {
    for (size_t i = 0; i < r.item_slots.size(); i++)
        if (r.item_slots[i].has_value() && r.item_slots[i]->id == id) return static_cast<int>(i);
    return -1;
}

inline int find_patron(const Registry& r, int id) {
    for (size_t i = 0; i < r.patron_slots.size(); i++)
        if (r.patron_slots[i].has_value() && r.patron_slots[i]->id == id)
            return static_cast<int>(i);
    return -1;
}

// Succeeds only when both parties exist and both are free, then links them
// symmetrically. Failure never mutates.
inline bool borrow(Registry& r, int patron_id, int item_id) {
    int pi = find_patron(r, patron_id);
    int ii = find_item(r, item_id);
    if (pi < 0 || ii < 0) return false;
    LendPatron& p = *r.patron_slots[static_cast<size_t>(pi)];
    LendItem& it = *r.item_slots[static_cast<size_t>(ii)];
    if (p.item != -1 || it.borrower != -1) return false;
    p.item = item_id;
    it.borrower = patron_id;
    return true;
}

// Succeeds only when the two sides name each other, then clears both links.
inline bool return_item(Registry& r, int patron_id, int item_id) {
    int pi = find_patron(r, patron_id);
    int ii = find_item(r, item_id);
    if (pi < 0 || ii < 0) return false;
    LendPatron& p = *r.patron_slots[static_cast<size_t>(pi)];
    LendItem& it = *r.item_slots[static_cast<size_t>(ii)];
    if (p.item != item_id || it.borrower != patron_id) return false;
    p.item = -1;
    it.borrower = -1;
    return true;
}

// A borrowed item releases its patron before the slot empties, so no link
// ever dangles.
inline bool remove_item(Registry& r, int item_id) {
    int ii = find_item(r, item_id);
    if (ii < 0) return false;
    LendItem& it = *r.item_slots[static_cast<size_t>(ii)];
    if (it.borrower != -1) {
        int pi = find_patron(r, it.borrower);
        if (pi >= 0) r.patron_slots[static_cast<size_t>(pi)]->item = -1;
    }
    r.item_slots[static_cast<size_t>(ii)].reset();
    return true;
}

// Fills exactly one vacant slot; the id comes from the monotone counter.
inline std::optional<int> add_item(Registry& r, int type_code, int num_pages,
                                   const std::string& author, const std::string& name) {
    for (auto& slot : r.item_slots) {
        if (!slot.has_value()) {
            LendItem it;
            it.id = r.next_item_id++;
            it.type_code = type_code;
            it.num_pages = num_pages;
            it.author = author;
            it.name = name;
            slot = it;
            return it.id;
        }
    }
    return std::nullopt;
}

inline std::optional<int> add_patron(Registry& r) {
    for (auto& slot : r.patron_slots) {
        if (!slot.has_value()) {
            LendPatron p;
            p.id = r.next_patron_id++;
            slot = p;
            return p.id;
        }
    }
    return std::nullopt;
}

// The Ex-library starting point: three books and three patrons, page counts
// drawn from the seeded generator.
inline Registry make_default_registry(Lcg& rng, int item_capacity = 3, int patron_capacity = 3) {
    Registry r(item_capacity, patron_capacity);
    for (int i = 0; i < item_capacity; i++)
        add_item(r, kBookType, static_cast<int>(rng.next_range(900)) + 100, "author", "name");
    for (int i = 0; i < patron_capacity; i++) add_patron(r);
    return r;
}

// Full-registry report. Staff mode shows who borrowed what; patron mode
// redacts the borrower down to availability.
inline std::string report(const Registry& r, bool staff_mode) {
    std::ostringstream os;
    os << "\n\n===== \n>> BOOKS:\n";
    for (const auto& slot : r.item_slots) {
        if (!slot.has_value()) continue;
        const LendItem& it = *slot;
        os << "\nID: " << it.id << ", ";
        os << "Type: " << it.type_code << ", ";
        if (staff_mode)
            os << "Borrower: " << it.borrower << ", ";
        else
            os << "Available: " << (it.borrower == -1 ? "yes" : "no") << ", ";
        if (it.type_code == kBookType || it.type_code == kPeriodicalType)
            os << "Number of Pages: " << it.num_pages << ", ";
        if (it.type_code == kBookType) os << "Author: " << it.author << ", ";
        os << "\n";
    }
    os << "\n>> PATRONS:\n";
    for (const auto& slot : r.patron_slots) {
        if (!slot.has_value()) continue;
        const LendPatron& p = *slot;
        os << "\nID: " << p.id << ", ";
        os << "Borrowed Item: " << p.item << ", ";
        os << "\n";
    }
    return os.str();
}

// The integrity scan the tests lean on: every link must be mirrored by its
// counterpart and point at a live record.
inline bool cross_references_consistent(const Registry& r) {
    for (const auto& slot : r.item_slots) {
        if (!slot.has_value() || slot->borrower == -1) continue;
        int pi = find_patron(r, slot->borrower);
        if (pi < 0) return false;
        if (r.patron_slots[static_cast<size_t>(pi)]->item != slot->id) return false;
    }
    for (const auto& slot : r.patron_slots) {
        if (!slot.has_value() || slot->item == -1) continue;
        int ii = find_item(r, slot->item);
        if (ii < 0) return false;
        if (r.item_slots[static_cast<size_t>(ii)]->borrower != slot->id) return false;
    }
    return true;
}

} // namespace acc
