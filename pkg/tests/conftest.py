from hypothesis import strategies as st

from klr_workbench.qlaurent import LaurentPoly

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def partitions_strategy(max_size: int = 8):
    def build(parts):
        return tuple(sorted((x for x in parts if x > 0), reverse=True))

    return st.lists(st.integers(1, max_size), max_size=max_size).map(build).filter(lambda mu: sum(mu) <= max_size)
