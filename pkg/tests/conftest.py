from hypothesis import settings

# Chart tables are built lazily on first use, which can blow the default
# per-example deadline; wall-clock budgets are enforced per suite instead.
settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")
