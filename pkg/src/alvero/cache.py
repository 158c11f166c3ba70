"""Disk cache for reduced Groebner bases.

One file per key under the cache directory.  The key hashes the order tag,
the ambient variable count, and the canonical text of the generator set, so
a hit is exact.  Writes go through a temp file plus atomic rename: concurrent
readers see either the old or the new file, and the last writer wins with
identical content.  The cache is purely an optimization; results are
identical with it disabled.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path

from .groebner import BuchbergerStats, GroebnerBasis, MonomialOrder
from .polycore import MultiPoly
from .textform import format_multipoly, parse_multipoly

FORMAT_VERSION = 1
DEFAULT_CACHE_DIR = ".alvero-cache"


def basis_cache_key(gens, order: MonomialOrder) -> str:
    nvars = gens[0].nvars
    h = hashlib.sha256()
    h.update(f"alvero-basis-cache {FORMAT_VERSION}\n".encode())
    h.update(f"order {order.tag}\n".encode())
    h.update(f"nvars {nvars}\n".encode())
    for text in sorted(format_multipoly(g) for g in gens):
        h.update(text.encode())
        h.update(b"\n")
    return h.hexdigest()


class BasisCache:
    """File-backed store of reduced bases keyed by (generators, order)."""

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def _path(self, key: str) -> Path:
        return self.directory / f"basis-{key}.txt"

    def get(self, gens, order: MonomialOrder) -> GroebnerBasis | None:
        gens = tuple(gens)
        path = self._path(basis_cache_key(gens, order))
        try:
            lines = path.read_text().splitlines()
        except OSError:
            return None
        try:
            return self._parse(lines, gens, order)
        except (ValueError, IndexError):
            # unreadable or stale-format entry: treat as a miss
            return None

    def _parse(self, lines, gens, order) -> GroebnerBasis | None:
        if not lines or lines[0] != f"alvero-basis-cache {FORMAT_VERSION}":
            return None
        if lines[1] != f"order {order.tag}":
            return None
        nvars = int(lines[2].split()[1])
        if nvars != gens[0].nvars:
            return None
        ngens = int(lines[3].split()[1])
        pos = 4
        stored_hashes = lines[pos : pos + ngens]
        pos += ngens
        own_hashes = sorted(
            hashlib.sha256(format_multipoly(g).encode()).hexdigest() for g in gens
        )
        if stored_hashes != own_hashes:
            return None
        nbasis = int(lines[pos].split()[1])
        pos += 1
        basis = tuple(
            parse_multipoly(lines[pos + k], nvars) for k in range(nbasis)
        )
        pos += nbasis
        s_pairs, reductions = (int(v) for v in lines[pos].split()[1:3])
        return GroebnerBasis(
            gens, basis, order, BuchbergerStats(s_pairs, reductions)
        )

    def put(self, gb: GroebnerBasis) -> None:
        if gb.cofactors is not None:
            return  # certificate runs are not cached
        self.directory.mkdir(parents=True, exist_ok=True)
        key = basis_cache_key(gb.generators_in, gb.order)
        lines = [
            f"alvero-basis-cache {FORMAT_VERSION}",
            f"order {gb.order.tag}",
            f"nvars {gb.nvars}",
            f"gens {len(gb.generators_in)}",
        ]
        lines.extend(
            sorted(
                hashlib.sha256(format_multipoly(g).encode()).hexdigest()
                for g in gb.generators_in
            )
        )
        lines.append(f"basis {len(gb.basis)}")
        lines.extend(format_multipoly(b) for b in gb.basis)
        lines.append(f"stats {gb.stats.s_pairs} {gb.stats.reduction_steps}")
        payload = "\n".join(lines) + "\n"
        fd, tmp = tempfile.mkstemp(
            dir=self.directory, prefix=f"basis-{key}.", suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, self._path(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
