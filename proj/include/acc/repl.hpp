#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "acc/bank.hpp"
#include "acc/bounded_queue.hpp"
#include "acc/bounded_stack.hpp"
#include "acc/hanoi.hpp"
#include "acc/lending.hpp"
#include "acc/linked_list.hpp"
#include "acc/rng.hpp"
#include "acc/undo.hpp"

// Interactive demo loops, each a command processor over plain streams so
// transcripts are testable. Prompt and message strings are fixed; tests
// diff against them.

namespace acc {

namespace detail {

inline void print_members(std::ostream& out, const std::vector<int>& data, int count) {
    out << "[ ";
    for (int i = 0; i < count; i++) out << data[static_cast<size_t>(i)] << " ";
    out << "]\n";
}

} // namespace detail

// Integer four-function calculator: operation code, two operands, result.
inline void run_calc(std::istream& in, std::ostream& out) {
    while (true) {
        out << "Enter operation type. 1 for add, 2 for subtract, 3 for multiply, 4 for "
               "divide, 0 to exit: ";
        int op = 0;
        if (!(in >> op) || op == 0) break;
        out << "Enter the first number: ";
        long long a = 0;
        if (!(in >> a)) break;
        out << "Enter the second number: ";
        long long b = 0;
        if (!(in >> b)) break;
        switch (op) {
        case 1:
            out << a + b << "\n";
            break;
        case 2:
            out << a - b << "\n";
            break;
        case 3:
            out << a * b << "\n";
            break;
        case 4:
            if (b == 0)
                out << "divide by zero!\n";
            else
                out << a / b << "\n";
            break;
        default:
            out << "Invalid operation!\n";
            break;
        }
    }
}

// Higher/lower guessing game; the secret comes from the seeded generator so
// a transcript replays exactly.
inline void run_guess(std::istream& in, std::ostream& out, Lcg& rng) {
    int secret = 1 + static_cast<int>(rng.next_range(10));
    while (true) {
        out << "enter a number: ";
        int guess = 0;
        if (!(in >> guess)) break;
        if (guess < secret) {
            out << "go higher\n";
        } else if (guess > secret) {
            out << "go lower\n";
        } else {
            out << "you win!\n";
            break;
        }
    }
}

inline void print_bank_account(std::ostream& out, const Account& acc) {
    out << "Account:\n";
    out << "Account #: " << acc.number << "\n";
    out << "Name: " << acc.name << "\n";
    out << "Balance: " << acc.balance << "\n";
}

inline void print_bank_transaction(std::ostream& out, const Transaction& t) {
    out << "Transaction:\n";
    out << "Account #: " << t.account << "\n";
    out << "Type: " << transaction_type_name(t.type) << "\n";
    out << "Amount: " << t.amount << "\n";
}

// Banking session: three accounts opened up front, then transactions are
// queued and run first-in-first-out. `replay` transactions (a journal load)
// apply silently between account setup and the menu; every applied
// transaction lands in *applied_log when given, replayed ones included.
inline void run_bank(std::istream& in, std::ostream& out, Ledger& ledger,
                     const std::vector<Transaction>* replay = nullptr,
                     std::vector<Transaction>* applied_log = nullptr) {
    for (int i = 0; i < 3; i++) {
        out << "Enter account holder's name: ";
        std::string name;
        if (!(in >> name)) return;
        open_account(ledger, name);
    }
    if (replay != nullptr) {
        for (const auto& t : *replay) {
            if (submit_transaction(ledger, t) != SubmitStatus::Ok) continue;
            RunOutcome o = run_next_transaction(ledger);
            if (o.status == RunOutcome::Applied && applied_log != nullptr)
                applied_log->push_back(o.transaction);
        }
    }
    while (true) {
        out << "0-Exit, 1-Create Transaction, 2-Run Transaction, 3-List Transactions: ";
        int cmd = 0;
        if (!(in >> cmd) || cmd == 0) break;
        switch (cmd) {
        case 1: {
            Transaction t;
            out << "Enter account number: ";
            if (!(in >> t.account)) return;
            out << "Enter transaction type (1-Report, 2-Deposit, 3-Withdraw): ";
            if (!(in >> t.type)) return;
            out << "Enter transaction amount: ";
            if (!(in >> t.amount)) return;
            if (submit_transaction(ledger, t) != SubmitStatus::Ok)
                out << "Invalid transaction\n";
            break;
        }
        case 2: {
            RunOutcome o = run_next_transaction(ledger);
            if (o.status == RunOutcome::Applied) {
                if (applied_log != nullptr) applied_log->push_back(o.transaction);
                if (o.transaction.type == 1) print_bank_account(out, o.snapshot);
            } else if (o.status == RunOutcome::Rejected) {
                out << "Rejected\n";
            }
            break;
        }
        case 3:
            for (const auto& t : ledger.pending) print_bank_transaction(out, t);
            break;
        default:
            out << "invalid command\n";
            break;
        }
    }
}

// Lending desk menu over a registry; staff mode reports borrower ids,
// patron mode only availability.
inline void run_lend(std::istream& in, std::ostream& out, Registry& registry, bool staff_mode) {
    while (true) {
        out << "1-Report, 2-Borrow, 3-Return, 0-Exit \n";
        int cmd = 0;
        if (!(in >> cmd) || cmd == 0) break;
        switch (cmd) {
        case 1:
            out << report(registry, staff_mode);
            break;
        case 2:
        case 3: {
            out << "Enter patron ID: ";
            int patron_id = 0;
            if (!(in >> patron_id)) return;
            out << "Enter book ID: ";
            int item_id = 0;
            if (!(in >> item_id)) return;
            bool ok = cmd == 2 ? borrow(registry, patron_id, item_id)
                               : return_item(registry, patron_id, item_id);
            out << (ok ? "Done\n" : "Sorry\n");
            break;
        }
        default:
            out << "Invalid command\n";
            break;
        }
    }
}

// Queue demo: every add/remove/show echoes the whole array.
inline void run_queue(std::istream& in, std::ostream& out, int capacity) {
    BoundedQueue q(capacity);
    while (true) {
        out << "\n >> 0-exit 1-add 2-remove 3-show: ";
        int cmd = 0;
        if (!(in >> cmd) || cmd == 0) break;
        switch (cmd) {
        case 1: {
            out << "enter new data: ";
            int value = 0;
            if (!(in >> value)) return;
            if (enqueue(q, value) == QueueStatus::Full)
                out << "Could not add data. Queue is full.\n";
            detail::print_members(out, q.data, q.count);
            break;
        }
        case 2: {
            int got = 0;
            if (dequeue(q, got) == QueueStatus::Empty)
                out << "Could not remove data. Queue is empty.\n";
            detail::print_members(out, q.data, q.count);
            break;
        }
        case 3:
            detail::print_members(out, q.data, q.count);
            break;
        default:
            break;
        }
    }
}

inline void run_stack(std::istream& in, std::ostream& out, int capacity) {
    BoundedStack s(capacity);
    while (true) {
        out << "\n >> 0-exit 1-add 2-remove 3-show: ";
        int cmd = 0;
        if (!(in >> cmd) || cmd == 0) break;
        switch (cmd) {
        case 1: {
            out << "enter new data: ";
            int value = 0;
            if (!(in >> value)) return;
            if (push(s, value) == StackStatus::Full)
                out << "Could not add data. Stack is full.\n";
            detail::print_members(out, s.data, s.count);
            break;
        }
        case 2: {
            int got = 0;
            if (pop(s, got) == StackStatus::Empty)
                out << "Could not remove data. Stack is empty.\n";
            detail::print_members(out, s.data, s.count);
            break;
        }
        case 3:
            detail::print_members(out, s.data, s.count);
            break;
        default:
            break;
        }
    }
}

// Linked-list roster demo; ids are drawn from the seeded generator.
inline void run_list(std::istream& in, std::ostream& out, Lcg& rng) {
    LinkedList<int> ids;
    while (true) {
        out << "\n >> 0 - exit, 1 - add, 2 - insert, 3 - delete, 4 - report : ";
        int cmd = 0;
        if (!(in >> cmd) || cmd == 0) break;
        switch (cmd) {
        case 1:
            list_append(ids, 1000 + static_cast<int>(rng.next_range(100)));
            break;
        case 2: {
            out << "enter index: ";
            int index = 0;
            if (!(in >> index)) return;
            list_insert(ids, index, 1000 + static_cast<int>(rng.next_range(100)));
            break;
        }
        case 3: {
            out << "enter index: ";
            int index = 0;
            if (!(in >> index)) return;
            list_delete(ids, index);
            break;
        }
        case 4:
            for (auto* n = ids.head; n != nullptr; n = n->next) out << n->payload << "\n";
            break;
        default:
            out << "\n enter valid command 0-4\n";
            break;
        }
    }
}

// Two-phase Hanoi: pick a bar to pop, then a bar to push. The disk is only
// "in hand" here in the loop; the game state changes through the atomic
// move alone, so an illegal push leaves the bars exactly as shown. Popping
// an empty bar silently restarts the round, and push-back-to-source is
// allowed as a no-op round.
inline void run_hanoi(std::istream& in, std::ostream& out, int disks) {
    HanoiGame game = make_hanoi(disks);
    while (true) {
        out << "A: ";
        detail::print_members(out, game.bars[0].data, game.bars[0].count);
        out << "B: ";
        detail::print_members(out, game.bars[1].data, game.bars[1].count);
        out << "C: ";
        detail::print_members(out, game.bars[2].data, game.bars[2].count);
        if (is_won(game)) {
            out << "you win!\n";
            break;
        }

        out << "\n >> 0-exit 1-pop from A, 2-pop from B, 3-pop from C: ";
        int cmd = 0;
        if (!(in >> cmd) || cmd == 0) break;
        if (cmd < 1 || cmd > 3) continue;
        int from = cmd - 1;
        int in_hand = 0;
        if (pop(game.bars[static_cast<size_t>(from)], in_hand, false) == StackStatus::Empty)
            continue;

        out << "\n >> 0-exit 1-push to A, 2-push to B, 3-push to C: ";
        if (!(in >> cmd) || cmd == 0) break;
        if (cmd < 1 || cmd > 3) continue;
        int to = cmd - 1;
        if (to == from) continue;
        move_disk(game, from, to);
    }
}

// Line-oriented undo demo over a fixed-height buffer.
inline void run_undo(std::istream& in, std::ostream& out, int rows, int history_capacity) {
    TextBuffer buf;
    buf.rows.assign(static_cast<size_t>(rows), "");
    UndoStack st(history_capacity);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cmd;
        if (!(ls >> cmd)) continue;
        if (cmd == "quit") break;
        if (cmd == "type") {
            int row = 0, column = 0;
            std::string ch;
            int selection = 0;
            if (!(ls >> row >> column >> ch) || ch.size() != 1) {
                out << "usage: type <row> <col> <ch> [sel_len] | undo | show | quit\n";
                continue;
            }
            if (!(ls >> selection)) selection = 0;
            if (apply_edit(buf, st, row, column, ch[0], selection) != EditStatus::Ok)
                out << "out of bounds\n";
        } else if (cmd == "undo") {
            if (undo_last(buf, st) == UndoStatus::HistoryEmpty) out << "history empty\n";
        } else if (cmd == "show") {
            for (size_t i = 0; i < buf.rows.size(); i++)
                out << i << ": " << buf.rows[i] << "\n";
        } else {
            out << "usage: type <row> <col> <ch> [sel_len] | undo | show | quit\n";
        }
    }
}

} // namespace acc
