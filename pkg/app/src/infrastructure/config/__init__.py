# Configuration Infrastructure
