"""Plain-text matrix files.

One matrix row per line, whitespace-separated decimal fields, ``#`` starts a
comment line. Consecutive matrices are separated by blank lines; a complex
matrix is written as its real part followed by its imaginary part.
"""
import numpy as np

from .isometry import MapTable

__all__ = ["MatrixFileError", "parse_blocks", "read_blocks", "read_matrix", "read_map_table", "format_matrix"]


class MatrixFileError(ValueError):
    pass


def parse_blocks(text, source="<string>"):
    """Split `text` into matrices; returns a list of ``(first_line, array)``."""
    blocks, rows, start, width = [], [], None, None

    def close():
        if rows:
            blocks.append((start, np.array(rows, dtype=float)))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            close()
            rows, start, width = [], None, None
            continue
        try:
            row = [float(tok) for tok in line.split()]
        except ValueError:
            raise MatrixFileError(f"{source}:{lineno}: non-numeric field in {raw!r}") from None
        if not all(np.isfinite(row)):
            raise MatrixFileError(f"{source}:{lineno}: non-finite value")
        if width is None:
            start, width = lineno, len(row)
        elif len(row) != width:
            raise MatrixFileError(f"{source}:{lineno}: expected {width} fields, found {len(row)}")
        rows.append(row)
    close()
    return blocks


def read_blocks(path):
    with open(path) as fh:
        return parse_blocks(fh.read(), str(path))


def _square(path, lineno, M):
    if M.shape[0] != M.shape[1]:
        raise MatrixFileError(f"{path}:{lineno}: matrix is {M.shape[0]}x{M.shape[1]}, expected square")
    return M


def read_matrix(path):
    """Read a single square real matrix."""
    blocks = read_blocks(path)
    if len(blocks) != 1:
        raise MatrixFileError(f"{path}: expected one matrix, found {len(blocks)}")
    lineno, M = blocks[0]
    return _square(path, lineno, M)


def read_map_table(path):
    """Read input/output pairs of rotations.

    Each pair is either two consecutive blank-separated blocks or a single
    block of ``2n`` rows with the input on top.
    """
    mats = []
    for lineno, M in read_blocks(path):
        r, c = M.shape
        if r == 2 * c:
            mats += [(lineno, M[:c]), (lineno + c, M[c:])]
        else:
            mats.append((lineno, _square(path, lineno, M)))
    if not mats or len(mats) % 2:
        raise MatrixFileError(f"{path}: map table needs an even, nonzero number of matrices")
    pairs = [(mats[k][1], mats[k + 1][1]) for k in range(0, len(mats), 2)]
    try:
        return MapTable(tuple(pairs))
    except ValueError as exc:
        raise MatrixFileError(f"{path}: {exc}") from None


def _rows(M):
    return "\n".join(" ".join(f"{v:.16e}" for v in row) for row in M)


def format_matrix(M):
    """Text for `M`; complex input becomes real part, blank line, imaginary part."""
    M = np.asarray(M)
    if np.iscomplexobj(M):
        return _rows(M.real) + "\n\n" + _rows(M.imag) + "\n"
    return _rows(M) + "\n"
