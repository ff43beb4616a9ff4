"""
LZ78 phrase division of binary strings.

The phrase count is the LZ complexity of a configuration. The fast
paths walk a binary trie; naive_lz78_parse follows the definition
literally and serves as the reference oracle.
"""
import logging
from typing import List, Set
from errors import ParseError
from models.lz_dictionary import LzDictionary
from models.phrase_list import PhraseList

logger = logging.getLogger(__name__)


def _encode(text: str) -> bytes:
    """ASCII bytes of a binary string, rejecting any other symbol"""
    try:
        data = text.encode('ascii')
    except UnicodeEncodeError:
        data = None
    if data is None or data.translate(None, b'01'):
        offset = next(i for i, symbol in enumerate(text) if symbol not in '01')
        raise ParseError(f"Illegal symbol {text[offset]!r}, expected 0 or 1", offset=offset)
    return data


class Lz78Service:
    """Service for LZ78 parsing and phrase counting"""

    def lz78_parse(self, text: str) -> PhraseList:
        """
        Divide a binary string into LZ78 phrases, left to right.

        Each phrase is the longest known phrase extended by the next
        symbol. A final match with no symbol left to extend it still
        counts as one phrase.

        Args:
            text: String of '0'/'1' symbols (may be empty)

        Returns:
            PhraseList: The phrases, their count and the phrase trie

        Raises:
            ParseError: If text contains any other symbol
        """
        data = _encode(text)
        dictionary = LzDictionary()
        phrases: List[str] = []
        node = LzDictionary.ROOT
        start = 0

        for position, byte in enumerate(data):
            symbol = byte & 1
            child = dictionary.child(node, symbol)
            if child:
                node = child
                continue
            dictionary.add(node, symbol)
            phrases.append(text[start:position + 1])
            start = position + 1
            node = LzDictionary.ROOT

        if start < len(data):
            phrases.append(text[start:])

        return PhraseList(phrases=phrases, count=len(phrases), dictionary=dictionary)

    def lz78_phrase_count(self, text: str) -> int:
        """
        Count LZ78 phrases without materializing them.

        The trie is one flat list: the children of node n sit at slots
        2n (symbol 0) and 2n+1 (symbol 1); 0 marks a missing child.

        Args:
            text: String of '0'/'1' symbols (may be empty)

        Returns:
            int: Number of phrases, equal to len(lz78_parse(text).phrases)

        Raises:
            ParseError: If text contains any other symbol
        """
        data = _encode(text)
        children = [0, 0]
        node = 0
        count = 0

        for byte in data:
            slot = 2 * node + (byte & 1)
            child = children[slot]
            if child:
                node = child
            else:
                children[slot] = len(children) >> 1
                children.append(0)
                children.append(0)
                count += 1
                node = 0

        if node:
            count += 1
        return count

    def naive_lz78_parse(self, text: str) -> List[str]:
        """
        Reference LZ78 parse, straight from the definition.

        At each position the longest already-divided phrase matching the
        input is searched by trying every candidate length, longest first;
        the new phrase is that match plus the next symbol.

        Args:
            text: String of '0'/'1' symbols

        Returns:
            List[str]: The divided phrases
        """
        _encode(text)
        known: Set[str] = {''}
        phrases: List[str] = []
        longest = 0
        position = 0

        while position < len(text):
            match = 0
            for length in range(min(longest, len(text) - position), 0, -1):
                if text[position:position + length] in known:
                    match = length
                    break

            end = min(position + match + 1, len(text))
            phrase = text[position:end]
            phrases.append(phrase)
            known.add(phrase)
            longest = max(longest, len(phrase))
            position = end

        return phrases


# Global LZ78 service instance
lz78_service = Lz78Service()
