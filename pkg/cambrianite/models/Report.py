from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one verification. Failed properties are recorded, never raised."""

    name: str
    passed: bool = True
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    skipped: bool = False
    reason: str = ""

    def fail(self, message):
        self.passed = False
        self.violations.append(message)

    def check(self, condition, message):
        if not condition:
            self.fail(message)
        return condition

    def skip(self, reason):
        self.skipped = True
        self.reason = reason
        return self

    @property
    def status(self):
        if self.skipped:
            return "skipped"
        return "passed" if self.passed else "failed"

    def serialize(self):
        return {
            "name": self.name,
            "status": self.status,
            "violations": self.violations,
            "details": self.details,
            "reason": self.reason,
        }
