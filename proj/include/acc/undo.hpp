#pragma once

#include <string>
#include <vector>

namespace acc {

struct TextBuffer {
    std::vector<std::string> rows;
};

// One recorded edit: the character typed, where, and exactly the text it
// overwrote (empty for a pure insertion). That is everything reversal needs.
struct UndoElement {
    char ch = 0;
    int row = 0;
    int column = 0;
    std::string replaced_text;
};

// Bounded LIFO history. Overflow discards the oldest entry; dropping the
// newest would break reversal of recent edits.
struct UndoStack {
    std::vector<UndoElement> entries;
    int capacity = 0;

    UndoStack() = default;
    explicit UndoStack(int cap) : capacity(cap) {}
};

enum class EditStatus {
    Ok,
    OutOfBounds,
};

// Replaces the selection_length characters at (row, column) with ch and
// records the edit. Selections never cross a line boundary.
inline EditStatus apply_edit(TextBuffer& buf, UndoStack& st, int row, int column, char ch,
                             int selection_length) {
    if (row < 0 || row >= static_cast<int>(buf.rows.size())) return EditStatus::OutOfBounds;
    std::string& line = buf.rows[static_cast<size_t>(row)];
    if (column < 0 || column > static_cast<int>(line.size())) return EditStatus::OutOfBounds;
    if (selection_length < 0 ||
        column + selection_length > static_cast<int>(line.size()))
        return EditStatus::OutOfBounds;

    UndoElement rec;
    rec.ch = ch;
    rec.row = row;
    rec.column = column;
    rec.replaced_text = line.substr(static_cast<size_t>(column),
                                    static_cast<size_t>(selection_length));
    line.erase(static_cast<size_t>(column), static_cast<size_t>(selection_length));
    line.insert(line.begin() + column, ch);

    if (st.capacity > 0 && static_cast<int>(st.entries.size()) >= st.capacity)
        st.entries.erase(st.entries.begin());
    st.entries.push_back(rec);
    return EditStatus::Ok;
}

enum class UndoStatus {
    Ok,
    HistoryEmpty,
};

// Pops the newest edit and restores the exact pre-edit text at its spot.
inline UndoStatus undo_last(TextBuffer& buf, UndoStack& st) {
    if (st.entries.empty()) return UndoStatus::HistoryEmpty;
    UndoElement rec = st.entries.back();
    st.entries.pop_back();
    std::string& line = buf.rows[static_cast<size_t>(rec.row)];
    line.erase(static_cast<size_t>(rec.column), 1);
    line.insert(static_cast<size_t>(rec.column), rec.replaced_text);
    return UndoStatus::Ok;
}

} // namespace acc
