#pragma once

#include <utility>
#include <vector>

namespace acc {

// Doubly linked list with head/tail tracking and an opaque payload type.
// Positional semantics are deliberately forgiving: inserting past the end
// appends, deleting a missing position is a reported no-op.
template <typename T>
struct LinkedList {
    struct Node {
        T payload;
        Node* next = nullptr;
        Node* prev = nullptr;
    };

    Node* head = nullptr;
    Node* tail = nullptr;
    int count = 0;

    LinkedList() = default;

    LinkedList(const LinkedList&) = delete;
    LinkedList& operator=(const LinkedList&) = delete;

    LinkedList(LinkedList&& other) noexcept
        : head(other.head), tail(other.tail), count(other.count) {
        other.head = other.tail = nullptr;
        other.count = 0;
    }

    LinkedList& operator=(LinkedList&& other) noexcept {
        if (this != &other) {
            clear();
            head = other.head;
            tail = other.tail;
            count = other.count;
            other.head = other.tail = nullptr;
            other.count = 0;
        }
        return *this;
    }

    ~LinkedList() { clear(); }

    void clear() {
        Node* n = head;
        while (n != nullptr) {
            Node* next = n->next;
            delete n;
            n = next;
        }
        head = tail = nullptr;
        count = 0;
    }

    bool empty() const { return count == 0; }
};

// Inserts before the node currently at position i; i >= count appends.
template <typename T>
void list_insert(LinkedList<T>& l, int i, T payload) {
    using Node = typename LinkedList<T>::Node;
    Node* fresh = new Node{std::move(payload), nullptr, nullptr};
    if (l.head == nullptr) {
        l.head = l.tail = fresh;
    } else if (i >= l.count) {
        fresh->prev = l.tail;
        l.tail->next = fresh;
        l.tail = fresh;
    } else {
        Node* at = l.head;
        for (int n = 0; n < i; n++) at = at->next;
        fresh->next = at;
        fresh->prev = at->prev;
        if (at->prev != nullptr)
            at->prev->next = fresh;
        else
            l.head = fresh;
        at->prev = fresh;
    }
    l.count++;
}

template <typename T>
void list_append(LinkedList<T>& l, T payload) {
    list_insert(l, l.count, std::move(payload));
}

// Unlinks and destroys the node at position i; returns false (list untouched)
// when no such position exists.
template <typename T>
bool list_delete(LinkedList<T>& l, int i) {
    if (i < 0 || i >= l.count) return false;
    using Node = typename LinkedList<T>::Node;
    Node* at = l.head;
    for (int n = 0; n < i; n++) at = at->next;
    if (at->prev != nullptr)
        at->prev->next = at->next;
    else
        l.head = at->next;
    if (at->next != nullptr)
        at->next->prev = at->prev;
    else
        l.tail = at->prev;
    delete at;
    l.count--;
    return true;
}

template <typename T>
std::vector<T> list_to_sequence(const LinkedList<T>& l) {
    std::vector<T> out;
    out.reserve(static_cast<size_t>(l.count));
    for (auto* n = l.head; n != nullptr; n = n->next) out.push_back(n->payload);
    return out;
}

// Structural self-check used by the tests: head/tail/count agree with the
// links and every prev mirrors a next.
template <typename T>
bool list_links_consistent(const LinkedList<T>& l) {
    if (l.count == 0) return l.head == nullptr && l.tail == nullptr;
    if (l.head == nullptr || l.tail == nullptr) return false;
    if (l.head->prev != nullptr || l.tail->next != nullptr) return false;
    int seen = 0;
    for (auto* n = l.head; n != nullptr; n = n->next) {
        if (n->next != nullptr && n->next->prev != n) return false;
        if (n->next == nullptr && n != l.tail) return false;
        seen++;
        if (seen > l.count) return false;
    }
    return seen == l.count;
}

} // namespace acc
