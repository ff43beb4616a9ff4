from typing import List


class LzDictionary:
    """
    Binary trie of LZ78 phrases rooted at the empty phrase.

    Node ids double as phrase indices: the root is 0 and each new phrase
    gets the next id. Children are kept as two fixed branches, one per
    symbol, with 0 meaning "no child" (the root is never a child).
    """

    ROOT = 0

    def __init__(self):
        self.branches: List[List[int]] = [[0], [0]]
        self.parents: List[int] = [0]
        self.symbols: List[int] = [0]

    @property
    def node_count(self) -> int:
        return len(self.parents)

    def child(self, node: int, symbol: int) -> int:
        """Child of node along symbol, or 0 when absent"""
        return self.branches[symbol][node]

    def add(self, node: int, symbol: int) -> int:
        """Attach a new phrase extending node by symbol; returns its id"""
        new_id = len(self.parents)
        self.branches[symbol][node] = new_id
        self.branches[0].append(0)
        self.branches[1].append(0)
        self.parents.append(node)
        self.symbols.append(symbol)
        return new_id

    def phrase(self, node: int) -> str:
        """Spell the phrase at node"""
        symbols = []
        while node != self.ROOT:
            symbols.append('1' if self.symbols[node] else '0')
            node = self.parents[node]
        return ''.join(reversed(symbols))

    def phrases(self) -> List[str]:
        """All known phrases in insertion order, excluding the empty root"""
        return [self.phrase(node) for node in range(1, self.node_count)]
