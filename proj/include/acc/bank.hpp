#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace acc {

inline constexpr int kFirstAccountNumber = 1000;

struct Account {
    int number = 0;
    std::string name;
    long long balance = 0;
};

// type 1 = Report, 2 = Deposit, 3 = Withdraw; amount is ignored for Report.
struct Transaction {
    int account = 0;
    int type = 0;
    long long amount = 0;
};

inline const char* transaction_type_name(int type) {
    switch (type) {
    case 1:
        return "Report";
    case 2:
        return "Deposit";
    case 3:
        return "Withdraw";
    default:
        return "?";
    }
}

// Accounts are numbered sequentially from 1000, so lookup is arithmetic.
// Pending transactions apply strictly first-in-first-out. With
// strict_overdraft a withdrawal below zero is rejected instead of applied.
struct Ledger {
    std::vector<Account> accounts;
    std::vector<Transaction> pending;
    bool strict_overdraft = false;
};

inline int open_account(Ledger& l, const std::string& name) {
    Account acc;
    acc.number = kFirstAccountNumber + static_cast<int>(l.accounts.size());
    acc.name = name;
    acc.balance = 0;
    l.accounts.push_back(acc);
    return acc.number;
}

inline Account* find_account(Ledger& l, int number) {
    int index = number - kFirstAccountNumber;
    if (index < 0 || index >= static_cast<int>(l.accounts.size())) return nullptr;
    return &l.accounts[static_cast<size_t>(index)];
}

inline const Account* find_account(const Ledger& l, int number) {
    return find_account(const_cast<Ledger&>(l), number);
}

enum class SubmitStatus {
    Ok,
    InvalidTransaction,
    UnknownAccount,
};

inline SubmitStatus submit_transaction(Ledger& l, const Transaction& t) {
    if (t.type < 1 || t.type > 3) return SubmitStatus::InvalidTransaction;
    if (find_account(l, t.account) == nullptr) return SubmitStatus::UnknownAccount;
    l.pending.push_back(t);
    return SubmitStatus::Ok;
}

struct RunOutcome {
    enum Status {
        Applied,
        NothingPending,
        UnknownAccount,
        Rejected, // strict-overdraft refusal; the transaction is still consumed
    };
    Status status = NothingPending;
    Transaction transaction;
    Account snapshot; // post-state of the touched account when one exists
};

// Dequeues and applies the oldest pending transaction. Validation repeats
// here because an account could in principle vanish between submit and run.
inline RunOutcome run_next_transaction(Ledger& l) {
    RunOutcome out;
    if (l.pending.empty()) {
        out.status = RunOutcome::NothingPending;
        return out;
    }
    out.transaction = l.pending.front();
    l.pending.erase(l.pending.begin());
    Account* acc = find_account(l, out.transaction.account);
    if (acc == nullptr) {
        out.status = RunOutcome::UnknownAccount;
        return out;
    }
    switch (out.transaction.type) {
    case 1:
        break;
    case 2:
        acc->balance += out.transaction.amount;
        break;
    case 3:
        if (l.strict_overdraft && acc->balance - out.transaction.amount < 0) {
            out.status = RunOutcome::Rejected;
            out.snapshot = *acc;
            return out;
        }
        acc->balance -= out.transaction.amount;
        break;
    default:
        break;
    }
    out.status = RunOutcome::Applied;
    out.snapshot = *acc;
    return out;
}

inline std::optional<Account> report_account(const Ledger& l, int number) {
    const Account* acc = find_account(l, number);
    if (acc == nullptr) return std::nullopt;
    return *acc;
}

// Journal lines are "<account> <type> <amount>", one transaction per line;
// replaying them through submit/run reconstructs the balances.
inline std::string journal_line(const Transaction& t) {
    std::ostringstream os;
    os << t.account << " " << t.type << " " << t.amount;
    return os.str();
}

inline std::optional<Transaction> parse_journal_line(const std::string& line) {
    std::istringstream is(line);
    Transaction t;
    if (!(is >> t.account >> t.type >> t.amount)) return std::nullopt;
    std::string rest;
    if (is >> rest) return std::nullopt;
    return t;
}

} // namespace acc
