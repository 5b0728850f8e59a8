import asyncio


async def fetch(url):
    async with session.get(url) as resp:
        return await resp.json()


async def gather_all(urls):
    results = [await fetch(u) for u in urls]
    return results


def plain():
    return 1
