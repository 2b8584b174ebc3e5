"""Dual channels: the same inputs with the roles of sent and received swapped."""

from posets.graded import GradedChannel


class DualChannel(GradedChannel):
    """x ~> y in the dual iff y ~> x in the base channel.

    Level sets, encodings and ranks are the base channel's; only the
    direction of the relation changes.
    """

    def __init__(self, base: GradedChannel):
        self.base = base
        self.family = base.family
        self.rank_increases = not base.rank_increases
        self.is_dual = not base.is_dual
        self.rank_range = base.rank_range

    def natural_range(self):
        return self.base.natural_range()

    def rank(self, x):
        return self.base.rank(x)

    def leq(self, y, x):
        return self.base.leq(x, y)

    def level_size(self, l):
        return self.base.level_size(l)

    def _generate_level(self, l):
        return self.base._generate_level(l)

    def check(self, x):
        self.base.check(x)

    def render(self, x):
        return self.base.render(x)

    def parse(self, text):
        return self.base.parse(text)

    def params(self):
        return self.base.params()


def dual(ch: GradedChannel) -> GradedChannel:
    """The dual channel; dual(dual(ch)) is ch itself."""
    if isinstance(ch, DualChannel):
        return ch.base
    return DualChannel(ch)
